"""Instance transformations that preserve the optimal robust flow value.

`split_capacities` rewrites every arc as a gateway arc of capacity u_max
followed by parallel unit arcs, producing an equivalent instance whose
capacities all lie in {1, u_max}; failing an original arc corresponds to
failing its gateway.  `finitize_infinities` replaces INF by a finite
upper bound on any flow that must cross a finite arc, and
`scale_to_integral` clears denominators, scaling the optimum linearly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NonIntegralCapacity, NotFeasible, UnboundedFlow
from .model import ExtendedRational, INF, Instance, Path, PathFlow


@dataclass(frozen=True)
class ArcMap:
    """How original arcs map into a split instance.

    forward[orig_id] = (gateway arc id, tuple of unit arc ids); the unit
    list has exactly as many entries as the original integral capacity.
    """

    forward: dict[int, tuple[int, tuple[int, ...]]]

    def gateway_of(self) -> dict[int, int]:
        """Inverse lookup: gateway arc id -> original arc id."""
        return {gw: orig for orig, (gw, _) in self.forward.items()}

    def unit_of(self) -> dict[int, int]:
        """Inverse lookup: unit arc id -> original arc id."""
        return {
            unit: orig
            for orig, (_, units) in self.forward.items()
            for unit in units
        }


def split_capacities(inst: Instance) -> tuple[Instance, ArcMap]:
    """Split every arc into gateway (capacity u_max) plus unit arcs.

    Requires finite integral capacities.  The failure budget k and the
    optimal robust flow value are unchanged.
    """
    u_max = 0
    for arc in inst.arcs:
        if arc.capacity.is_infinite or arc.capacity.value.denominator != 1:
            raise NonIntegralCapacity(
                f"arc {arc.arc_id} has capacity {arc.capacity}; need a finite integer"
            )
        u_max = max(u_max, int(arc.capacity.value))
    new_arcs: list[tuple[int, int, ExtendedRational]] = []
    forward: dict[int, tuple[int, tuple[int, ...]]] = {}
    gateway_cap = ExtendedRational(u_max)
    unit_cap = ExtendedRational(1)
    next_node = inst.node_count
    for arc in inst.arcs:
        mid = next_node
        next_node += 1
        gateway_id = len(new_arcs)
        new_arcs.append((arc.tail, mid, gateway_cap))
        units = []
        for _ in range(int(arc.capacity.value)):
            units.append(len(new_arcs))
            new_arcs.append((mid, arc.head, unit_cap))
        forward[arc.arc_id] = (gateway_id, tuple(units))
    split = Instance.build(next_node, new_arcs, inst.source, inst.sink, inst.k)
    return split, ArcMap(forward=forward)


def map_flow_back(
    orig: Instance, transformed: Instance, arc_map: ArcMap, flow: PathFlow
) -> PathFlow:
    """Contract a feasible flow on the split instance back to the original.

    Every path of the split instance alternates gateway and unit arcs;
    each pair contracts to one original arc.  Robust value and
    integrality are preserved.
    """
    bad = flow.feasibility_violations(transformed)
    if bad:
        raise NotFeasible("; ".join(bad))
    gateway_of = arc_map.gateway_of()
    unit_of = arc_map.unit_of()
    merged: dict[Path, Fraction] = {}
    for path, val in flow.items():
        orig_ids = []
        pending = None  # original arc whose gateway was just traversed
        for aid in path.arc_ids:
            if aid in gateway_of:
                if pending is not None:
                    raise NotFeasible(f"path {path.arc_ids} breaks gateway pairing")
                pending = gateway_of[aid]
            else:
                if pending is None or unit_of[aid] != pending:
                    raise NotFeasible(f"path {path.arc_ids} breaks gateway pairing")
                orig_ids.append(pending)
                pending = None
        if pending is not None:
            raise NotFeasible(f"path {path.arc_ids} ends inside a split arc")
        key = Path(tuple(orig_ids))
        merged[key] = merged.get(key, Fraction(0)) + val
    return PathFlow.from_dict(merged)


def finitize_infinities(inst: Instance) -> Instance:
    """Replace INF capacities by the sum of all finite capacities.

    Any source-sink flow crosses at least one finite arc, so the bound is
    safe.  Raises UnboundedFlow if some source-sink path consists of INF
    arcs only, in which case no finite bound exists.
    """
    # Reachability over INF arcs only.
    reach = {inst.source}
    frontier = [inst.source]
    while frontier:
        v = frontier.pop()
        for arc in inst.out_arcs[v]:
            if arc.capacity.is_infinite and arc.head not in reach:
                reach.add(arc.head)
                frontier.append(arc.head)
    if inst.sink in reach:
        raise UnboundedFlow("an all-INF source-sink path exists")
    bound = sum(
        (arc.capacity.value for arc in inst.arcs if not arc.capacity.is_infinite),
        Fraction(0),
    )
    if all(not arc.capacity.is_infinite for arc in inst.arcs):
        return inst
    cap_bound = ExtendedRational(bound)
    new_arcs = [
        (arc.tail, arc.head, cap_bound if arc.capacity.is_infinite else arc.capacity)
        for arc in inst.arcs
    ]
    return Instance.build(inst.node_count, new_arcs, inst.source, inst.sink, inst.k)


def scale_to_integral(inst: Instance) -> tuple[Instance, Fraction]:
    """Scale all capacities by the lcm of their denominators.

    Returns the scaled instance and the scale; the optimal robust flow
    value scales by exactly the same factor.
    """
    caps = inst.finite_capacities()
    scale = Fraction(lcm(*(c.denominator for c in caps.values())) if caps else 1)
    if scale == 1:
        return inst, scale
    new_arcs = [
        (arc.tail, arc.head, ExtendedRational(arc.capacity.value * scale))
        for arc in inst.arcs
    ]
    return Instance.build(inst.node_count, new_arcs, inst.source, inst.sink, inst.k), scale
