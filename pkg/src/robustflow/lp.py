"""Exact solution of the robust-flow LP over path variables.

The primal maximizes (total flow) - lambda subject to arc capacities and,
for every failure scenario S, (flow on paths hit by S) <= lambda.  Paths
are always fully enumerated; the scenario family is either materialized
completely (`solve_full_lp`) or generated lazily by separating with the
brute-force worst-case adversary (`solve_row_generation`).  Both return
the same exact objective.

Dual certificates pair a capacity price y(e) per arc with a distribution
z over scenarios (sum z = 1); `verify_duality` re-checks a certificate
from scratch and `dual_separation` searches for a violated path
constraint of the dual polyhedron by brute force.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Optional

from . import simplex
from .errors import EnumerationBudgetExceeded
from .evaluation import worst_case_scenario
from .formats import format_rational, parse_rational
from .graphs import enumerate_paths
from .model import Instance, Path, PathFlow, Scenario

DEFAULT_PATH_LIMIT = 10**5
DEFAULT_SCENARIO_BUDGET = 10**6


@dataclass
class PrimalSolution:
    x: PathFlow
    lam: Fraction
    objective: Fraction


@dataclass
class DualSolution:
    y: dict[int, Fraction]
    z: dict[Scenario, Fraction]


@dataclass
class SolveReport:
    primal: PrimalSolution
    dual: Optional[DualSolution]
    worst_scenario: Scenario
    iterations: int
    scenarios_generated: int
    # Master objectives per row-generation round; not serialized.
    master_objectives: tuple[Fraction, ...] = field(default=())


def _solve_master(
    inst: Instance,
    paths: list[Path],
    scenarios: list[Scenario],
    nominal_target: Optional[Fraction],
):
    """Solve the path LP with the given scenario rows; exact.

    Returns (pathflow, lambda, objective, y, z_list).  Capacities are
    scaled to integers; the solution is scaled back, the duals need no
    scaling.  Lambda is a nonnegative variable, which never cuts off an
    optimum because the worst-case destroyed value is nonnegative.
    """
    caps = inst.finite_capacities()
    scale = lcm(*(c.denominator for c in caps.values())) if caps else 1
    np_ = len(paths)
    n = np_ + 1  # lambda is the last column
    a_ub: list[list[int]] = []
    b_ub: list[int] = []
    for arc in inst.arcs:
        row = [1 if arc.arc_id in p.arc_set else 0 for p in paths] + [0]
        a_ub.append(row)
        b_ub.append(int(caps[arc.arc_id] * scale))
    for sc in scenarios:
        row = [1 if not sc.arc_ids.isdisjoint(p.arc_set) else 0 for p in paths]
        row.append(-1)
        a_ub.append(row)
        b_ub.append(0)
    a_eq: list[list[int]] = []
    b_eq: list[int] = []
    if nominal_target is not None:
        target = nominal_target * scale
        if target.denominator != 1 or target < 0:
            raise ValueError("nominal target must scale to a nonnegative integer")
        a_eq.append([1] * np_ + [0])
        b_eq.append(int(target))
    c = [1] * np_ + [-1]
    res = simplex.solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    if res.status != simplex.OPTIMAL:
        # The LP is always feasible (zero flow) and bounded by capacities.
        raise RuntimeError(f"unexpected LP status {res.status}")
    x = PathFlow.from_dict(
        {paths[i]: res.x[i] / scale for i in range(np_) if res.x[i]}
    )
    lam = res.x[np_] / scale
    objective = res.objective / scale
    y = {
        inst.arcs[i].arc_id: res.duals_ub[i]
        for i in range(inst.m)
        if res.duals_ub[i]
    }
    z_list = [
        (scenarios[j], res.duals_ub[inst.m + j])
        for j in range(len(scenarios))
        if res.duals_ub[inst.m + j]
    ]
    return x, lam, objective, y, z_list


def _normalized_dual(inst: Instance, y, z_list) -> DualSolution:
    """Pack duals; top up the z distribution to sum exactly 1.

    When the optimal lambda is zero the scenario-row duals can sum below
    one; adding the deficit to the lexicographically smallest scenario
    keeps dual feasibility (path left-hand sides only grow) and leaves the
    dual objective unchanged.
    """
    z = {sc: val for sc, val in z_list}
    total = sum(z.values(), Fraction(0))
    if total != 1:
        filler = Scenario.of(range(inst.k))
        z[filler] = z.get(filler, Fraction(0)) + (1 - total)
    return DualSolution(y=y, z=z)


def solve_full_lp(
    inst: Instance,
    path_limit: int = DEFAULT_PATH_LIMIT,
    scenario_budget: int = DEFAULT_SCENARIO_BUDGET,
    *,
    nominal_target: Optional[Fraction] = None,
) -> SolveReport:
    """Solve with every scenario constraint materialized.

    `nominal_target`, when given, adds the equality (total flow) == target;
    this is used to probe which nominal values optimal solutions can have.
    """
    paths = enumerate_paths(inst, path_limit)
    total = comb(inst.m, inst.k)
    if total > scenario_budget:
        raise EnumerationBudgetExceeded(
            f"C({inst.m},{inst.k}) = {total} scenario rows exceed budget {scenario_budget}"
        )
    scenarios = [Scenario.of(ids) for ids in combinations(range(inst.m), inst.k)]
    x, lam, objective, y, z_list = _solve_master(inst, paths, scenarios, nominal_target)
    worst, _ = worst_case_scenario(inst, x, scenario_budget)
    return SolveReport(
        primal=PrimalSolution(x=x, lam=lam, objective=objective),
        dual=_normalized_dual(inst, y, z_list),
        worst_scenario=worst,
        iterations=1,
        scenarios_generated=total,
        master_objectives=(objective,),
    )


def solve_row_generation(
    inst: Instance,
    path_limit: int = DEFAULT_PATH_LIMIT,
    separation_budget: int = DEFAULT_SCENARIO_BUDGET,
) -> SolveReport:
    """Row generation: grow the scenario set from the separation oracle.

    Starts with no scenario rows and repeatedly adds the worst-case
    scenario of the current master solution while it destroys more than
    the master's lambda.  Terminates with the exact optimum of the full
    LP after at most C(m, k) rounds.
    """
    paths = enumerate_paths(inst, path_limit)
    if comb(inst.m, inst.k) > separation_budget:
        raise EnumerationBudgetExceeded(
            f"separation needs C({inst.m},{inst.k}) scenarios, over budget {separation_budget}"
        )
    scenarios: list[Scenario] = []
    objectives: list[Fraction] = []
    while True:
        x, lam, objective, y, z_list = _solve_master(inst, paths, scenarios, None)
        objectives.append(objective)
        worst, destroyed = worst_case_scenario(inst, x, separation_budget)
        if destroyed > lam:
            scenarios.append(worst)
            continue
        return SolveReport(
            primal=PrimalSolution(x=x, lam=lam, objective=objective),
            dual=_normalized_dual(inst, y, z_list),
            worst_scenario=worst,
            iterations=len(objectives),
            scenarios_generated=len(scenarios),
            master_objectives=tuple(objectives),
        )


def verify_duality(
    report: SolveReport, inst: Instance, path_limit: int = DEFAULT_PATH_LIMIT
) -> bool:
    """Exact check of the dual certificate carried by a report.

    True iff y, z are nonnegative, z sums to one over valid size-k
    scenarios, every enumerated path constraint holds, and the dual
    objective equals the primal objective.
    """
    if report.dual is None:
        return False
    y, z = report.dual.y, report.dual.z
    if any(v < 0 for v in y.values()) or any(v < 0 for v in z.values()):
        return False
    for sc in z:
        if len(sc.arc_ids) != inst.k:
            return False
        if any(not 0 <= a < inst.m for a in sc.arc_ids):
            return False
    if sum(z.values(), Fraction(0)) != 1:
        return False
    paths = enumerate_paths(inst, path_limit)
    for path in paths:
        lhs = sum((y.get(e, Fraction(0)) for e in path.arc_ids), Fraction(0))
        lhs += sum(
            (v for sc, v in z.items() if not sc.arc_ids.isdisjoint(path.arc_set)),
            Fraction(0),
        )
        if lhs < 1:
            return False
    dual_obj = Fraction(0)
    for aid, val in y.items():
        cap = inst.arcs[aid].capacity
        if cap.is_infinite:
            if val != 0:
                return False
            continue
        dual_obj += cap.value * val
    return dual_obj == report.primal.objective


def dual_separation(
    inst: Instance,
    paths: list[Path],
    y: dict[int, Fraction],
    z: dict[Scenario, Fraction],
) -> Optional[Path]:
    """Brute-force separation for the dual polyhedron.

    Returns a most-violated path (minimum left-hand side below 1) from the
    given full enumeration, or None if every path constraint holds.
    """
    best_path = None
    best_lhs = None
    for path in paths:
        lhs = sum((y.get(e, Fraction(0)) for e in path.arc_ids), Fraction(0))
        lhs += sum(
            (v for sc, v in z.items() if not sc.arc_ids.isdisjoint(path.arc_set)),
            Fraction(0),
        )
        if lhs < 1 and (best_lhs is None or lhs < best_lhs):
            best_lhs = lhs
            best_path = path
    return best_path


def report_to_json(report: SolveReport) -> str:
    """Canonical JSON for a solve report; byte-stable round trips."""
    dual = None
    if report.dual is not None:
        dual = {
            "y": {
                str(aid): format_rational(val)
                for aid, val in sorted(report.dual.y.items())
            },
            "z": [
                {"scenario": list(sc.sorted_ids), "value": format_rational(val)}
                for sc, val in sorted(report.dual.z.items(), key=lambda kv: kv[0])
            ],
        }
    obj = {
        "objective": format_rational(report.primal.objective),
        "lambda": format_rational(report.primal.lam),
        "flow": [
            {"path": list(path.arc_ids), "value": format_rational(val)}
            for path, val in report.primal.x.items()
        ],
        "worst_scenario": list(report.worst_scenario.sorted_ids),
        "dual": dual,
        "iterations": report.iterations,
        "scenarios_generated": report.scenarios_generated,
    }
    return json.dumps(obj, indent=2)


def report_from_json(text: str) -> SolveReport:
    obj = json.loads(text)
    x = PathFlow.from_dict(
        {
            Path(tuple(entry["path"])): parse_rational(entry["value"])
            for entry in obj["flow"]
        }
    )
    dual = None
    if obj["dual"] is not None:
        dual = DualSolution(
            y={int(k): parse_rational(v) for k, v in obj["dual"]["y"].items()},
            z={
                Scenario.of(entry["scenario"]): parse_rational(entry["value"])
                for entry in obj["dual"]["z"]
            },
        )
    return SolveReport(
        primal=PrimalSolution(
            x=x,
            lam=parse_rational(obj["lambda"]),
            objective=parse_rational(obj["objective"]),
        ),
        dual=dual,
        worst_scenario=Scenario.of(obj["worst_scenario"]),
        iterations=obj["iterations"],
        scenarios_generated=obj["scenarios_generated"],
    )
