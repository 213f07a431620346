"""Graph algorithms on instances: path enumeration, exact max-flow/min-cut,
and decomposition of arc flows into path flows.

All arithmetic is exact.  Max flow scales the rational capacities to
integers by their common denominator and runs capacity-scaling augmenting
paths, so the result is integral whenever all capacities are integral.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import lcm
from typing import Mapping, Optional, Sequence

from .errors import InfiniteCapacity, NotAFlow, PathLimitExceeded
from .model import Cut, ExtendedRational, Instance, Path, PathFlow


def simple_paths(
    node_count: int,
    out_adj: Sequence[Sequence[tuple[int, int]]],
    source: int,
    target: int,
    limit: int,
) -> list[tuple[int, ...]]:
    """All simple source-target paths as arc-id tuples, lexicographic order.

    `out_adj[v]` lists (arc_id, head) pairs sorted by arc_id.  Raises
    PathLimitExceeded as soon as more than `limit` paths are found.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    if source == target:
        return [()]
    found: list[tuple[int, ...]] = []
    # Iterative DFS; each stack frame tracks the next adjacency index.
    stack = [(source, 0)]
    path_arcs: list[int] = []
    on_path = {source}
    while stack:
        node, idx = stack[-1]
        if idx >= len(out_adj[node]):
            stack.pop()
            on_path.discard(node)
            if path_arcs:
                path_arcs.pop()
            continue
        stack[-1] = (node, idx + 1)
        arc_id, head = out_adj[node][idx]
        if head == target:
            found.append(tuple(path_arcs + [arc_id]))
            if len(found) > limit:
                raise PathLimitExceeded(f"more than {limit} simple paths")
        elif head not in on_path:
            stack.append((head, 0))
            path_arcs.append(arc_id)
            on_path.add(head)
    return found


def enumerate_paths(inst: Instance, limit: int) -> list[Path]:
    """All simple source-sink paths of an instance, deterministically ordered.

    Parallel arcs yield distinct paths.  Raises PathLimitExceeded when more
    than `limit` paths exist.
    """
    adj = tuple(
        tuple((arc.arc_id, arc.head) for arc in arcs) for arcs in inst.out_arcs
    )
    raw = simple_paths(inst.node_count, adj, inst.source, inst.sink, limit)
    return [Path(arc_ids) for arc_ids in raw]


def _effective_int_caps(
    inst: Instance, capacity_override: Optional[Mapping[int, ExtendedRational]]
) -> tuple[list[int], int]:
    """Effective capacities scaled to integers; returns (caps, scale)."""
    caps: list[Fraction] = []
    for arc in inst.arcs:
        cap = arc.capacity
        if capacity_override is not None and arc.arc_id in capacity_override:
            cap = ExtendedRational(capacity_override[arc.arc_id])
        if cap.is_infinite:
            raise InfiniteCapacity(
                f"arc {arc.arc_id} has effective capacity INF; finitize first"
            )
        caps.append(cap.value)
    scale = lcm(*(c.denominator for c in caps)) if caps else 1
    return [int(c * scale) for c in caps], scale


def max_flow(
    inst: Instance,
    capacity_override: Optional[Mapping[int, ExtendedRational]] = None,
) -> tuple[Fraction, dict[int, Fraction]]:
    """Exact maximum flow value and per-arc flow.

    `capacity_override` replaces the capacity of the listed arcs (used for
    unit-capacity relaxations).  The arc flow is integral whenever all
    effective capacities are integral.
    """
    icaps, scale = _effective_int_caps(inst, capacity_override)
    m = inst.m
    s, t = inst.source, inst.sink
    flow = [0] * m
    # Residual adjacency: (arc_id, neighbor, forward?) sorted for determinism.
    neighbors: list[list[tuple[int, int, bool]]] = [[] for _ in range(inst.node_count)]
    for arc in inst.arcs:
        neighbors[arc.tail].append((arc.arc_id, arc.head, True))
        neighbors[arc.head].append((arc.arc_id, arc.tail, False))
    for lst in neighbors:
        lst.sort(key=lambda item: (item[0], not item[2]))

    def residual(aid: int, forward: bool) -> int:
        return icaps[aid] - flow[aid] if forward else flow[aid]

    max_cap = max(icaps, default=0)
    delta = 1 << (max_cap.bit_length() - 1) if max_cap > 0 else 0
    while delta >= 1:
        while True:
            # BFS for an augmenting path using residuals >= delta.
            parent: dict[int, tuple[int, int, bool]] = {}
            seen = {s}
            queue = deque([s])
            while queue and t not in seen:
                v = queue.popleft()
                for aid, w, fwd in neighbors[v]:
                    if w not in seen and residual(aid, fwd) >= delta:
                        seen.add(w)
                        parent[w] = (v, aid, fwd)
                        queue.append(w)
                        if w == t:
                            break
            if t not in seen:
                break
            # Walk back, find bottleneck, augment.
            bottleneck = None
            v = t
            while v != s:
                u, aid, fwd = parent[v]
                r = residual(aid, fwd)
                bottleneck = r if bottleneck is None else min(bottleneck, r)
                v = u
            v = t
            while v != s:
                u, aid, fwd = parent[v]
                flow[aid] += bottleneck if fwd else -bottleneck
                v = u
        delta //= 2

    value = sum(flow[a.arc_id] for a in inst.out_arcs[s]) - sum(
        flow[a.arc_id] for a in inst.in_arcs[s]
    )
    arc_flow = {i: Fraction(flow[i], scale) for i in range(m) if flow[i]}
    return Fraction(value, scale), arc_flow


def min_cut(
    inst: Instance,
    capacity_override: Optional[Mapping[int, ExtendedRational]] = None,
) -> Cut:
    """A minimum source-sink cut; its capacity equals the max-flow value."""
    icaps, scale = _effective_int_caps(inst, capacity_override)
    _, arc_flow = max_flow(inst, capacity_override)
    flow = [int(arc_flow.get(i, 0) * scale) for i in range(inst.m)]
    # Nodes reachable from the source in the residual graph form the side.
    seen = {inst.source}
    queue = deque([inst.source])
    while queue:
        v = queue.popleft()
        for arc in inst.out_arcs[v]:
            if arc.head not in seen and icaps[arc.arc_id] - flow[arc.arc_id] > 0:
                seen.add(arc.head)
                queue.append(arc.head)
        for arc in inst.in_arcs[v]:
            if arc.tail not in seen and flow[arc.arc_id] > 0:
                seen.add(arc.tail)
                queue.append(arc.tail)
    crossing = frozenset(
        arc.arc_id
        for arc in inst.arcs
        if arc.tail in seen and arc.head not in seen
    )
    return Cut(arc_ids=crossing, side=frozenset(seen))


def path_decompose(inst: Instance, arc_flow: Mapping[int, Fraction]) -> PathFlow:
    """Decompose a conservative arc flow into a path flow.

    Cycles in the input are cancelled internally; only source-sink path
    mass is kept.  Raises NotAFlow on negative values or violated
    conservation.  The support has at most m paths.
    """
    residual: dict[int, Fraction] = {}
    for aid, val in arc_flow.items():
        if isinstance(val, float):
            raise NotAFlow("arc flow values must be exact rationals")
        val = Fraction(val)
        if val < 0:
            raise NotAFlow(f"negative flow on arc {aid}")
        if val > 0:
            residual[int(aid)] = val
    excess = [Fraction(0)] * inst.node_count
    for aid, val in residual.items():
        arc = inst.arcs[aid]
        excess[arc.tail] -= val
        excess[arc.head] += val
    for v in range(inst.node_count):
        if v in (inst.source, inst.sink):
            continue
        if excess[v] != 0:
            raise NotAFlow(f"conservation violated at node {v}")
    if excess[inst.sink] < 0:
        raise NotAFlow("net flow runs from sink to source")

    out_pos = [
        [arc.arc_id for arc in arcs] for arcs in inst.out_arcs
    ]  # static order; zero-flow arcs are skipped during walks

    def first_positive(v: int) -> Optional[int]:
        for aid in out_pos[v]:
            if residual.get(aid, 0) > 0:
                return aid
        return None

    collected: dict[Path, Fraction] = {}
    while first_positive(inst.source) is not None:
        # Walk from the source along positive arcs (smallest arc_id first);
        # peel a path at the sink, cancel a cycle on a repeated node.
        walk: list[int] = []
        visited = {inst.source: 0}
        node = inst.source
        while True:
            aid = first_positive(node)
            assert aid is not None, "conservation guarantees progress"
            walk.append(aid)
            node = inst.arcs[aid].head
            if node == inst.sink:
                segment = walk
                record = True
                break
            if node in visited:
                segment = walk[visited[node]:]
                record = False
                break
            visited[node] = len(walk)
        amount = min(residual[a] for a in segment)
        for a in segment:
            residual[a] -= amount
            if residual[a] == 0:
                del residual[a]
        if record:
            path = Path(tuple(segment))
            collected[path] = collected.get(path, Fraction(0)) + amount
    # Anything left is circulation mass not reaching the sink; drop it.
    return PathFlow.from_dict(collected)
