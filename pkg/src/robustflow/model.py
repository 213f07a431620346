"""Core data model: exact capacities, multigraph instances, paths, flows.

Everything is exact: finite capacities and flow values are
`fractions.Fraction`, never floats.  All types are immutable after
construction and safe to share between threads; the operations built on
top of them are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InfiniteCapacity


class ExtendedRational:
    """A nonnegative exact rational, or the distinguished infinite value INF.

    INF compares greater than every finite value and absorbs addition and
    positive scaling.  Floats are rejected outright so that no rounding can
    sneak into an instance.
    """

    __slots__ = ("_value",)

    def __init__(self, value=0):
        if isinstance(value, ExtendedRational):
            self._value = value._value
            return
        if value is None:  # internal: used once to build the INF constant
            self._value = None
            return
        if isinstance(value, float):
            raise TypeError("capacity must be an exact rational, not a float")
        v = Fraction(value)
        if v < 0:
            raise ValueError("capacity must be nonnegative")
        self._value = v

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        """The finite value; raises InfiniteCapacity on INF."""
        if self._value is None:
            raise InfiniteCapacity("capacity is INF")
        return self._value

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        text = text.strip()
        if text == "INF":
            return INF
        return cls(Fraction(text))

    def __add__(self, other):
        other = ExtendedRational(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return ExtendedRational(self._value + other._value)

    __radd__ = __add__

    def __mul__(self, factor):
        if isinstance(factor, float):
            raise TypeError("capacity scaling must be exact")
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("capacity scaling factor must be positive")
        if self.is_infinite:
            return INF
        return ExtendedRational(self._value * factor)

    __rmul__ = __mul__

    def _key(self, other):
        other = ExtendedRational(other)
        return self._value, other._value

    def __eq__(self, other):
        try:
            a, b = self._key(other)
        except (TypeError, ValueError):
            return NotImplemented
        return a == b

    def __lt__(self, other):
        a, b = self._key(other)
        if a is None:
            return False
        if b is None:
            return True
        return a < b

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        if self._value is None:
            return "INF"
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self):
        return f"ExtendedRational({str(self)!r})"


INF = ExtendedRational(None)


@dataclass(frozen=True)
class Arc:
    """One directed arc of a multigraph; identity is the arc_id."""

    arc_id: int
    tail: int
    head: int
    capacity: ExtendedRational


@dataclass(frozen=True)
class Instance:
    """A directed multigraph with source, sink and failure budget k.

    Parallel arcs are first-class: everything downstream is keyed by
    arc_id, never by (tail, head).  The constructor is permissive so that
    malformed instances can be built and then reported on by
    `validate_instance`; algorithms assume a valid instance.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    source: int
    sink: int
    k: int

    @classmethod
    def build(cls, node_count, arcs, source, sink, k) -> "Instance":
        """Build from (tail, head, capacity) triples; ids follow list order."""
        built = tuple(
            Arc(i, tail, head, ExtendedRational(cap))
            for i, (tail, head, cap) in enumerate(arcs)
        )
        return cls(node_count, built, source, sink, k)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def arc(self, arc_id: int) -> Arc:
        return self.arcs[arc_id]

    @cached_property
    def out_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        """Outgoing arcs per node, each sorted by arc_id."""
        out = [[] for _ in range(self.node_count)]
        for arc in self.arcs:
            out[arc.tail].append(arc)
        return tuple(tuple(lst) for lst in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        inc = [[] for _ in range(self.node_count)]
        for arc in self.arcs:
            inc[arc.head].append(arc)
        return tuple(tuple(lst) for lst in inc)

    def finite_capacities(self) -> dict[int, Fraction]:
        """All capacities as Fractions; raises InfiniteCapacity on INF."""
        caps = {}
        for arc in self.arcs:
            if arc.capacity.is_infinite:
                raise InfiniteCapacity(f"arc {arc.arc_id} has capacity INF")
            caps[arc.arc_id] = arc.capacity.value
        return caps


@dataclass(frozen=True, order=True)
class Path:
    """A simple source-sink path, as the sequence of its arc ids."""

    arc_ids: tuple[int, ...]

    @cached_property
    def arc_set(self) -> frozenset[int]:
        return frozenset(self.arc_ids)

    def __iter__(self):
        return iter(self.arc_ids)

    def __len__(self):
        return len(self.arc_ids)


def path_nodes(inst: Instance, path: Path) -> list[int]:
    """Node sequence visited by a path (source first, sink last)."""
    if not path.arc_ids:
        return [inst.source]
    nodes = [inst.arcs[path.arc_ids[0]].tail]
    for aid in path.arc_ids:
        nodes.append(inst.arcs[aid].head)
    return nodes


@dataclass(frozen=True)
class Cut:
    """A source-sink cut: the crossing arcs and the source-side node set."""

    arc_ids: frozenset[int]
    side: frozenset[int]

    def capacity(self, inst: Instance) -> ExtendedRational:
        total = ExtendedRational(0)
        for aid in sorted(self.arc_ids):
            total = total + inst.arcs[aid].capacity
        return total


@dataclass(frozen=True)
class Scenario:
    """A failure set of exactly k arcs."""

    arc_ids: frozenset[int]

    @classmethod
    def of(cls, ids: Iterable[int]) -> "Scenario":
        return cls(frozenset(int(i) for i in ids))

    @cached_property
    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.arc_ids))

    def __lt__(self, other: "Scenario"):
        return self.sorted_ids < other.sorted_ids

    def __len__(self):
        return len(self.arc_ids)


@dataclass(frozen=True)
class PathFlow:
    """A flow on simple source-sink paths; entries carry positive values.

    Entries are kept sorted by arc-id sequence, which makes equality,
    iteration order and serialized output deterministic.
    """

    entries: tuple[tuple[Path, Fraction], ...]

    @classmethod
    def from_dict(cls, values: Mapping[Path, Fraction]) -> "PathFlow":
        cleaned = []
        for path, val in values.items():
            if isinstance(val, float):
                raise TypeError("path flow values must be exact rationals")
            val = Fraction(val)
            if val < 0:
                raise ValueError(f"negative flow value on path {path.arc_ids}")
            if val > 0:
                cleaned.append((path, val))
        cleaned.sort(key=lambda item: item[0].arc_ids)
        return cls(tuple(cleaned))

    @classmethod
    def zero(cls) -> "PathFlow":
        return cls(())

    def items(self):
        return self.entries

    @cached_property
    def support(self) -> tuple[Path, ...]:
        return tuple(p for p, _ in self.entries)

    def value_of(self, path: Path) -> Fraction:
        for p, v in self.entries:
            if p == path:
                return v
        return Fraction(0)

    def arc_flows(self) -> dict[int, Fraction]:
        """Total flow per arc (only arcs carrying flow appear)."""
        flows: dict[int, Fraction] = {}
        for path, val in self.entries:
            for aid in path.arc_ids:
                flows[aid] = flows.get(aid, Fraction(0)) + val
        return flows

    def feasibility_violations(self, inst: Instance) -> list[str]:
        """Capacity violations of this flow against an instance."""
        report = []
        for aid, flow in sorted(self.arc_flows().items()):
            cap = inst.arcs[aid].capacity
            if not cap.is_infinite and flow > cap.value:
                report.append(f"arc {aid}: flow {flow} exceeds capacity {cap}")
        return report

    def __bool__(self):
        return bool(self.entries)

    def __len__(self):
        return len(self.entries)


def validate_instance(inst: Instance) -> list[str]:
    """Every violated instance invariant, in a fixed order; empty if valid."""
    report = []
    if inst.node_count < 1:
        report.append("node count must be positive")
    if not 0 <= inst.source < inst.node_count:
        report.append("source out of range")
    if not 0 <= inst.sink < inst.node_count:
        report.append("sink out of range")
    if inst.source == inst.sink:
        report.append("source equals sink")
    for pos, arc in enumerate(inst.arcs):
        if arc.arc_id != pos:
            report.append(f"arc at position {pos} has id {arc.arc_id}; ids must be consecutive from 0")
        if not (0 <= arc.tail < inst.node_count and 0 <= arc.head < inst.node_count):
            report.append(f"arc {arc.arc_id} has endpoint out of range")
        if arc.tail == arc.head:
            report.append(f"arc {arc.arc_id} is a self-loop")
    if inst.k < 0:
        report.append("k must be nonnegative")
    elif inst.k > inst.m:
        report.append("k exceeds arc count")
    return report
