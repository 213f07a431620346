"""Text formats for instances, path flows and scenarios.

Instance format (one record per line, '#' starts a comment):

    p rflow <node_count> <arc_count> <k>
    s <node_id>
    t <node_id>
    a <tail> <head> <capacity>

Capacities are "INF", "<int>" or "<num>/<den>".  Arc ids are assigned in
file order starting at 0.  Parsing is strict: unknown record types,
duplicate headers and count mismatches are errors.

Path flows: one line per path, "f <arc_id> ... : <rational>".
Scenarios:  "S <arc_id> ...".
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormatError
from .model import ExtendedRational, INF, Instance, Path, PathFlow, Scenario

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q" in lowest terms, denominator always explicit."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise FormatError(f"bad rational {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise FormatError(f"bad rational {text!r}") from exc


def format_capacity(cap: ExtendedRational) -> str:
    return str(cap)


def parse_capacity(text: str) -> ExtendedRational:
    text = text.strip()
    if text == "INF":
        return INF
    try:
        return ExtendedRational(parse_rational(text))
    except ValueError as exc:
        raise FormatError(f"bad capacity {text!r}") from exc


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_instance(text: str) -> Instance:
    header = None
    source = None
    sink = None
    arcs = []
    for lineno, fields in _records(text):
        kind = fields[0]
        if kind == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate p record")
            if len(fields) != 5 or fields[1] != "rflow":
                raise FormatError(f"line {lineno}: expected 'p rflow <n> <m> <k>'")
            try:
                header = tuple(int(f) for f in fields[2:])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad p record") from exc
        elif kind in ("s", "t"):
            if header is None:
                raise FormatError(f"line {lineno}: record before p header")
            if len(fields) != 2:
                raise FormatError(f"line {lineno}: expected '{kind} <node>'")
            try:
                node = int(fields[1])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad node id") from exc
            if not 0 <= node < header[0]:
                raise FormatError(f"line {lineno}: node id out of range")
            if kind == "s":
                if source is not None:
                    raise FormatError(f"line {lineno}: duplicate s record")
                source = node
            else:
                if sink is not None:
                    raise FormatError(f"line {lineno}: duplicate t record")
                sink = node
        elif kind == "a":
            if header is None:
                raise FormatError(f"line {lineno}: record before p header")
            if len(fields) != 4:
                raise FormatError(f"line {lineno}: expected 'a <tail> <head> <cap>'")
            try:
                tail, head = int(fields[1]), int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad arc endpoints") from exc
            if not (0 <= tail < header[0] and 0 <= head < header[0]):
                raise FormatError(f"line {lineno}: arc endpoint out of range")
            arcs.append((tail, head, parse_capacity(fields[3])))
        else:
            raise FormatError(f"line {lineno}: unknown record type {kind!r}")
    if header is None:
        raise FormatError("missing p record")
    if source is None or sink is None:
        raise FormatError("missing s or t record")
    node_count, arc_count, k = header
    if len(arcs) != arc_count:
        raise FormatError(
            f"p record announces {arc_count} arcs but {len(arcs)} were given"
        )
    return Instance.build(node_count, arcs, source, sink, k)


def write_instance(inst: Instance) -> str:
    lines = [f"p rflow {inst.node_count} {inst.m} {inst.k}"]
    lines.append(f"s {inst.source}")
    lines.append(f"t {inst.sink}")
    for arc in inst.arcs:
        lines.append(f"a {arc.tail} {arc.head} {format_capacity(arc.capacity)}")
    return "\n".join(lines) + "\n"


def parse_path_flow(text: str) -> PathFlow:
    values: dict[Path, Fraction] = {}
    for lineno, fields in _records(text):
        if fields[0] != "f":
            raise FormatError(f"line {lineno}: unknown record type {fields[0]!r}")
        if ":" not in fields:
            raise FormatError(f"line {lineno}: expected 'f <arcs...> : <value>'")
        sep = fields.index(":")
        if sep != len(fields) - 2:
            raise FormatError(f"line {lineno}: expected one value after ':'")
        try:
            arc_ids = tuple(int(f) for f in fields[1:sep])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad arc id") from exc
        path = Path(arc_ids)
        if path in values:
            raise FormatError(f"line {lineno}: duplicate path")
        values[path] = parse_rational(fields[sep + 1])
    try:
        return PathFlow.from_dict(values)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_path_flow(flow: PathFlow) -> str:
    lines = [
        "f " + " ".join(str(a) for a in path.arc_ids) + " : " + format_rational(val)
        for path, val in flow.items()
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_scenario(text: str) -> Scenario:
    records = list(_records(text))
    if len(records) != 1 or records[0][1][0] != "S":
        raise FormatError("expected a single 'S <arc ids...>' record")
    try:
        ids = [int(f) for f in records[0][1][1:]]
    except ValueError as exc:
        raise FormatError("bad arc id in scenario") from exc
    return Scenario.of(ids)


def write_scenario(scenario: Scenario) -> str:
    return "S " + " ".join(str(a) for a in scenario.sorted_ids) + "\n"
