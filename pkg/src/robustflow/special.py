"""Exact solvers for the tractable regimes, plus a brute-force integral oracle.

Unit capacities: any maximum flow is a maximum robust flow, with value
max{0, |C| - k} for a minimum cut C.  Integral capacities in {1, 2}: the
optimum is max{0, val(x1) - k, val(x2) - 2k} where x1 is a unit-capacity
maximum flow and x2 a true maximum flow, and the corresponding flow
attains it.  The greedy cut-interdiction trace that underlies the second
result is exposed for inspection; the solver itself never branches on it.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    CapacityOutOfRange,
    EnumerationBudgetExceeded,
    NonIntegralCapacity,
    NotUnitCapacity,
    PathLimitExceeded,
)
from .graphs import enumerate_paths, max_flow, min_cut, path_decompose
from .model import ExtendedRational, Instance, PathFlow


def solve_unit_capacity(inst: Instance) -> tuple[PathFlow, Fraction]:
    """Maximum robust flow for unit capacities: a max flow, valued |C| - k."""
    one = ExtendedRational(1)
    for arc in inst.arcs:
        if arc.capacity != one:
            raise NotUnitCapacity(f"arc {arc.arc_id} has capacity {arc.capacity}")
    _, arc_flow = max_flow(inst)
    flow = path_decompose(inst, arc_flow)
    cut = min_cut(inst)
    value = Fraction(max(0, len(cut.arc_ids) - inst.k))
    return flow, value


def _unit_override(inst: Instance) -> dict[int, ExtendedRational]:
    one = ExtendedRational(1)
    return {arc.arc_id: one for arc in inst.arcs}


def solve_integral_cap2(inst: Instance) -> tuple[PathFlow, Fraction]:
    """Maximum integral robust flow when every capacity is 1 or 2.

    Compares the zero flow, a unit-capacity maximum flow x1 (losing at
    most 1 per failed arc) and a true maximum flow x2 (losing at most 2),
    and returns the winner of max{0, val(x1) - k, val(x2) - 2k}.  Ties
    prefer the larger nominal value, then x1 over x2.
    """
    for arc in inst.arcs:
        if arc.capacity not in (ExtendedRational(1), ExtendedRational(2)):
            raise CapacityOutOfRange(
                f"arc {arc.arc_id} has capacity {arc.capacity}, need 1 or 2"
            )
    v1, f1 = max_flow(inst, _unit_override(inst))
    x1 = path_decompose(inst, f1)
    v2, f2 = max_flow(inst)
    x2 = path_decompose(inst, f2)
    k = inst.k
    candidates = [
        (Fraction(0), Fraction(0), 0, PathFlow.zero()),
        (v1 - k, v1, 2, x1),
        (v2 - 2 * k, v2, 1, x2),
    ]
    best = max(c[0] for c in candidates)
    _, _, _, flow = max(c for c in candidates if c[0] == best)
    return flow, best


def greedy_cut_interdiction(
    inst: Instance, x: PathFlow
) -> tuple[frozenset[int], list[tuple[int, Fraction]]]:
    """Greedy failure-set construction on a minimum-cardinality cut.

    Repeatedly removes the cut arc destroying the most not-yet-destroyed
    flow of x, until k arcs are chosen or the cut is exhausted.  The trace
    records (arc_id, destroyed delta) per step; deltas are nonincreasing.
    """
    cut = min_cut(inst, _unit_override(inst))
    cut_arcs = sorted(cut.arc_ids)
    alive = list(x.items())
    chosen: list[int] = []
    trace: list[tuple[int, Fraction]] = []
    while len(chosen) < inst.k and len(chosen) < len(cut_arcs):
        best_arc = None
        best_delta = Fraction(-1)
        for aid in cut_arcs:
            if aid in chosen:
                continue
            delta = sum((v for p, v in alive if aid in p.arc_set), Fraction(0))
            if delta > best_delta:
                best_delta = delta
                best_arc = aid
        chosen.append(best_arc)
        trace.append((best_arc, best_delta))
        alive = [(p, v) for p, v in alive if best_arc not in p.arc_set]
    return frozenset(chosen), trace


def brute_force_integral(
    inst: Instance, budget: int = 10**6
) -> tuple[PathFlow, Fraction]:
    """Exhaustive search over integral path flows; the oracle of record.

    Enumerates integral value vectors over all simple paths depth-first in
    lexicographic order, pruned by remaining capacities, and evaluates the
    worst-case adversary at each leaf.  Ties keep the lexicographically
    smallest vector.  Raises EnumerationBudgetExceeded when the number of
    explored assignments passes `budget`.
    """
    caps = inst.finite_capacities()
    for aid, cap in caps.items():
        if cap.denominator != 1:
            raise NonIntegralCapacity(f"arc {aid} has non-integral capacity {cap}")
    icaps = {aid: int(cap) for aid, cap in caps.items()}
    try:
        paths = enumerate_paths(inst, limit=max(budget, 1))
    except PathLimitExceeded as exc:
        raise EnumerationBudgetExceeded(str(exc)) from exc
    np_ = len(paths)
    m, k = inst.m, inst.k
    scenario_count = comb(m, k)
    arc_mask = [0] * m
    for idx, path in enumerate(paths):
        for aid in path.arc_ids:
            arc_mask[aid] |= 1 << idx
    scen_masks = []
    for ids in combinations(range(m), k):
        mask = 0
        for aid in ids:
            mask |= arc_mask[aid]
        scen_masks.append((mask, ids))
    # Static per-path bound and suffix sums for the optimistic prune.
    static_max = [min(icaps[a] for a in p.arc_ids) for p in paths]
    suffix = [0] * (np_ + 1)
    for i in range(np_ - 1, -1, -1):
        suffix[i] = suffix[i + 1] + static_max[i]

    values = [0] * np_
    best_val = Fraction(-1)
    best_vec: list[int] | None = None
    visits = 0
    remaining = dict(icaps)

    def evaluate(nominal: int) -> None:
        nonlocal best_val, best_vec
        if nominal <= best_val:
            return
        sup_mask = 0
        for i in range(np_):
            if values[i]:
                sup_mask |= 1 << i
        lam = 0
        cutoff = nominal - best_val  # once lam >= cutoff this leaf cannot win
        for mask, _ in scen_masks:
            mask &= sup_mask
            dv = 0
            rest = mask
            while rest:
                low = rest & -rest
                dv += values[low.bit_length() - 1]
                rest ^= low
            if dv > lam:
                lam = dv
                if lam >= cutoff:
                    return
        val = Fraction(nominal - lam)
        if val > best_val:
            best_val = val
            best_vec = values.copy()

    def search(i: int, nominal: int) -> None:
        nonlocal visits
        if nominal + suffix[i] <= best_val:
            return  # even saturating every later path cannot beat the best
        if i == np_:
            evaluate(nominal)
            return
        cap_here = min(remaining[a] for a in paths[i].arc_ids)
        for v in range(cap_here + 1):
            visits += 1
            if visits > budget:
                raise EnumerationBudgetExceeded(
                    f"integral search exceeded budget {budget}"
                )
            values[i] = v
            if v:
                for a in paths[i].arc_ids:
                    remaining[a] -= v
            search(i + 1, nominal + v)
            if v:
                for a in paths[i].arc_ids:
                    remaining[a] += v
        values[i] = 0

    if scenario_count == 0:
        raise EnumerationBudgetExceeded("instance admits no failure scenario")
    search(0, 0)
    assert best_vec is not None
    flow = PathFlow.from_dict(
        {paths[i]: Fraction(best_vec[i]) for i in range(np_) if best_vec[i]}
    )
    return flow, best_val
