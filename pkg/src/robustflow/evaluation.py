"""Evaluating path flows against the worst-case arc-failure adversary.

The adversary removes exactly k arcs; a path flow loses every path that
meets the failure set.  The worst case is found by exhaustive enumeration
behind an explicit budget gate, so results are exact and infeasibility is
loud rather than approximate.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import EnumerationBudgetExceeded
from .model import Instance, PathFlow, Scenario


def nominal_value(x: PathFlow) -> Fraction:
    """Total flow value before any failure."""
    return sum((v for _, v in x.items()), Fraction(0))


def arc_flow_value(x: PathFlow, arc_id: int) -> Fraction:
    """Total flow through one arc: the sum over paths containing it."""
    return sum((v for p, v in x.items() if arc_id in p.arc_set), Fraction(0))


def destroyed_value(x: PathFlow, scenario: Scenario) -> Fraction:
    """Flow lost to a failure set; every hit path counts exactly once."""
    hit = scenario.arc_ids
    return sum((v for p, v in x.items() if not hit.isdisjoint(p.arc_set)), Fraction(0))


def worst_case_scenario(
    inst: Instance, x: PathFlow, budget: int
) -> tuple[Scenario, Fraction]:
    """The maximizing failure set of size k and its exact destroyed value.

    Enumerates all C(m, k) scenarios; ties are broken lexicographically by
    sorted arc ids.  Raises EnumerationBudgetExceeded when the subset count
    exceeds `budget` (callers must fall back to structured adversaries).
    """
    m, k = inst.m, inst.k
    total = comb(m, k)
    if total > budget:
        raise EnumerationBudgetExceeded(
            f"C({m},{k}) = {total} scenarios exceed budget {budget}"
        )
    # Bitmask per arc over support-path indices makes each scenario cheap.
    values = [v for _, v in x.items()]
    arc_mask = [0] * m
    for idx, (path, _) in enumerate(x.items()):
        bit = 1 << idx
        for aid in path.arc_ids:
            arc_mask[aid] |= bit
    best_ids: tuple[int, ...] | None = None
    best_val = Fraction(-1)
    sums: dict[int, Fraction] = {0: Fraction(0)}
    for ids in combinations(range(m), k):
        mask = 0
        for aid in ids:
            mask |= arc_mask[aid]
        val = sums.get(mask)
        if val is None:
            val = Fraction(0)
            rest = mask
            while rest:
                low = rest & -rest
                val += values[low.bit_length() - 1]
                rest ^= low
            sums[mask] = val
        if val > best_val:
            best_val = val
            best_ids = ids
    assert best_ids is not None, "k <= m guarantees at least one scenario"
    return Scenario.of(best_ids), best_val


def robust_value(inst: Instance, x: PathFlow, budget: int = 10**6) -> Fraction:
    """Nominal value minus the worst-case destroyed value, exactly."""
    _, lam = worst_case_scenario(inst, x, budget)
    return nominal_value(x) - lam
