"""Command-line frontend.

Subcommands: validate, solve-lp, solve-int, eval, worst-case, transform,
gadget, approx, gen.  Exit codes: 0 success, 2 input error, 3 budget gate
(with a machine-readable JSON reason on stdout).  All rationals in output
are "p/q" in lowest terms; no floating point ever appears.

The --threads flag is accepted for interface stability; every operation
is a deterministic pure function, so output is byte-identical regardless
of its value.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path as FilePath

from . import gadgets, generators, kroute, lp, special, transforms
from .errors import BudgetError, RobustFlowError
from .evaluation import nominal_value, worst_case_scenario
from .formats import (
    format_rational,
    parse_instance,
    parse_path_flow,
    write_instance,
    write_path_flow,
    write_scenario,
)
from .model import Instance, validate_instance

DEFAULT_PATH_LIMIT = lp.DEFAULT_PATH_LIMIT
DEFAULT_BUDGET = lp.DEFAULT_SCENARIO_BUDGET


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="enumeration budget for scenario/search spaces")
    parser.add_argument("--path-limit", type=int, default=DEFAULT_PATH_LIMIT,
                        help="maximum number of simple paths to enumerate")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker hint; results are identical for any value")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rflow",
        description="Exact maximum robust flow toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="report instance invariant violations")
    p.add_argument("instance")
    _common_flags(p)

    p = sub.add_parser("solve-lp", help="solve the robust flow LP exactly")
    p.add_argument("instance")
    p.add_argument("--engine", choices=("rowgen", "full"), default="rowgen")
    _common_flags(p)

    p = sub.add_parser("solve-int", help="solve for an integral robust flow")
    p.add_argument("instance")
    _common_flags(p)

    p = sub.add_parser("eval", help="evaluate a path flow against the adversary")
    p.add_argument("instance")
    p.add_argument("--flow", required=True)
    _common_flags(p)

    p = sub.add_parser("worst-case", help="worst failure scenario for a path flow")
    p.add_argument("instance")
    p.add_argument("--flow", required=True)
    _common_flags(p)

    p = sub.add_parser("transform", help="rewrite an instance")
    p.add_argument("instance")
    p.add_argument("--mode", choices=("split", "finitize", "scale"), required=True)
    p.add_argument("-o", "--output", help="write the instance here instead of stdout")
    p.add_argument("--map-out", help="write the split arc map (JSON) here")
    _common_flags(p)

    p = sub.add_parser("gadget", help="build a hardness-reduction instance")
    gsub = p.add_subparsers(dest="gadget_kind", required=True)
    pc = gsub.add_parser("clique", help="clique reduction gadget")
    pc.add_argument("--graph", required=True, help="undirected graph file")
    pc.add_argument("--kprime", type=int, required=True)
    pc.add_argument("-o", "--output")
    pc.add_argument("--roles-out")
    _common_flags(pc)
    pa = gsub.add_parser("adp", help="arc-disjoint-paths reduction gadget")
    pa.add_argument("--graph", required=True, help="directed graph file")
    pa.add_argument("--terminals", type=int, nargs=4, required=True,
                    metavar=("S1", "T1", "S2", "T2"))
    pa.add_argument("-o", "--output")
    pa.add_argument("--roles-out")
    _common_flags(pa)

    p = sub.add_parser("approx", help="approximation baselines")
    asub = p.add_subparsers(dest="approx_kind", required=True)
    pk = asub.add_parser("kroute", help="(k+1)-uniform flow baseline")
    pk.add_argument("instance")
    pk.add_argument("--k", type=int, default=None,
                    help="failure budget (defaults to the instance's k)")
    _common_flags(pk)

    p = sub.add_parser("gen", help="generate a random test corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=8)
    p.add_argument("--max-arcs", type=int, default=14)
    p.add_argument("-o", "--output-prefix", required=True,
                   help="instances are written to <prefix><i>.rflow")
    _common_flags(p)
    return parser


def _load_instance(path: str) -> Instance:
    inst = parse_instance(FilePath(path).read_text())
    problems = validate_instance(inst)
    if problems:
        raise RobustFlowError("invalid instance: " + "; ".join(problems))
    return inst


def _print_kv(pairs) -> None:
    width = max(len(key) for key, _ in pairs)
    for key, val in pairs:
        print(f"{key.ljust(width)}  {val}")


def _cmd_validate(args) -> int:
    inst = parse_instance(FilePath(args.instance).read_text())
    problems = validate_instance(inst)
    if args.json:
        print(json.dumps({"valid": not problems, "violations": problems}, indent=2))
    elif problems:
        for item in problems:
            print(item)
    else:
        print("ok")
    return 0 if not problems else 2


def _cmd_solve_lp(args) -> int:
    inst = _load_instance(args.instance)
    if args.engine == "full":
        report = lp.solve_full_lp(inst, args.path_limit, args.budget)
    else:
        report = lp.solve_row_generation(inst, args.path_limit, args.budget)
    if args.json:
        print(lp.report_to_json(report))
    else:
        _print_kv([
            ("objective", format_rational(report.primal.objective)),
            ("lambda", format_rational(report.primal.lam)),
            ("worst scenario", " ".join(map(str, report.worst_scenario.sorted_ids))),
            ("iterations", str(report.iterations)),
            ("scenarios", str(report.scenarios_generated)),
        ])
        out = write_path_flow(report.primal.x)
        if out:
            print(out, end="")
    return 0


def _cmd_solve_int(args) -> int:
    inst = _load_instance(args.instance)
    caps = [arc.capacity for arc in inst.arcs]
    if all(not c.is_infinite and c.value == 1 for c in caps):
        solver = "unit"
        flow, value = special.solve_unit_capacity(inst)
    elif all(not c.is_infinite and c.value in (1, 2) for c in caps):
        solver = "cap2"
        flow, value = special.solve_integral_cap2(inst)
    else:
        solver = "brute"
        flow, value = special.brute_force_integral(inst, args.budget)
    if args.json:
        obj = {
            "objective": format_rational(value),
            "solver": solver,
            "flow": [
                {"path": list(p.arc_ids), "value": format_rational(v)}
                for p, v in flow.items()
            ],
        }
        print(json.dumps(obj, indent=2))
    else:
        _print_kv([("objective", format_rational(value)), ("solver", solver)])
        out = write_path_flow(flow)
        if out:
            print(out, end="")
    return 0


def _cmd_eval(args) -> int:
    inst = _load_instance(args.instance)
    flow = parse_path_flow(FilePath(args.flow).read_text())
    bad = flow.feasibility_violations(inst)
    if bad:
        raise RobustFlowError("infeasible flow: " + "; ".join(bad))
    scenario, lam = worst_case_scenario(inst, flow, args.budget)
    nominal = nominal_value(flow)
    robust = nominal - lam
    if args.json:
        obj = {
            "nominal": format_rational(nominal),
            "lambda": format_rational(lam),
            "worst_scenario": list(scenario.sorted_ids),
            "robust_value": format_rational(robust),
        }
        print(json.dumps(obj, indent=2))
    else:
        _print_kv([
            ("nominal", format_rational(nominal)),
            ("lambda", format_rational(lam)),
            ("worst scenario", " ".join(map(str, scenario.sorted_ids))),
            ("robust value", format_rational(robust)),
        ])
    return 0


def _cmd_worst_case(args) -> int:
    inst = _load_instance(args.instance)
    flow = parse_path_flow(FilePath(args.flow).read_text())
    scenario, lam = worst_case_scenario(inst, flow, args.budget)
    if args.json:
        obj = {
            "worst_scenario": list(scenario.sorted_ids),
            "destroyed": format_rational(lam),
        }
        print(json.dumps(obj, indent=2))
    else:
        print(write_scenario(scenario), end="")
        print(f"# destroyed {format_rational(lam)}")
    return 0


def _cmd_transform(args) -> int:
    inst = _load_instance(args.instance)
    arc_map = None
    scale = None
    if args.mode == "split":
        out, arc_map = transforms.split_capacities(inst)
    elif args.mode == "finitize":
        out = transforms.finitize_infinities(inst)
    else:
        out, scale = transforms.scale_to_integral(inst)
    text = write_instance(out)
    map_json = None
    if arc_map is not None:
        map_json = {
            str(orig): {"gateway": gw, "units": list(units)}
            for orig, (gw, units) in sorted(arc_map.forward.items())
        }
    if args.json:
        obj = {
            "mode": args.mode,
            "scale": None if scale is None else format_rational(scale),
            "instance": text,
            "arc_map": map_json,
        }
        print(json.dumps(obj, indent=2))
    else:
        if args.output:
            FilePath(args.output).write_text(text)
        else:
            print(text, end="")
        if args.map_out and map_json is not None:
            FilePath(args.map_out).write_text(json.dumps(map_json, indent=2))
        if scale is not None:
            print(f"# scale {format_rational(scale)}", file=sys.stderr)
    return 0


def _clique_roles_json(g: gadgets.CliqueGadget) -> dict:
    r = g.roles
    node_labels = {str(r.s): "s", str(r.t): "t", str(r.vprime): "v'", str(r.vdprime): "v''"}
    for v, node in r.a_node.items():
        node_labels[str(node)] = f"a[{v}]"
    for v, nodes in r.a_group.items():
        for i, node in enumerate(nodes):
            node_labels[str(node)] = f"A[{v}][{i}]"
    for v, nodes in r.b_group.items():
        for i, node in enumerate(nodes):
            node_labels[str(node)] = f"B[{v}][{i}]"
    for e, (ap, app) in r.edge_nodes.items():
        node_labels[str(ap)] = f"a'[{e}]"
        node_labels[str(app)] = f"a''[{e}]"
    return {
        "params": {
            "ell": str(g.ell),
            "k": str(g.k),
            "eps": format_rational(g.eps),
            "M": format_rational(g.big_m),
            "h": str(g.h),
        },
        "nodes": node_labels,
        "arc_groups": {
            "big": list(r.big_arcs),
            "unit_ab": list(r.unit_ab_arcs),
            "source_fan": {str(n): a for n, a in sorted(r.s_arc.items())},
            "sink_fan": {str(n): a for n, a in sorted(r.t_arc.items())},
            "parallel": list(r.e_arcs),
            "h_subgraph": {
                "e'_1": r.e1p, "e'_2": r.e2p, "e''_1": r.e1pp, "e''_2": r.e2pp,
                "(s,v'')": r.s_vdd, "(v',t)": r.vp_t, "(v',v'')": r.vp_vdd,
            },
            "failure_pool": sorted(r.failure_pool),
        },
    }


def _adp_roles_json(g: gadgets.AdpGadget) -> dict:
    r = g.roles
    return {
        "nodes": {
            "s": r.s, "t": r.t, "v": r.v, "v'": r.vprime, "v''": r.vdprime, "w": r.w,
            "s1": r.terminals[0], "t1": r.terminals[1],
            "s2": r.terminals[2], "t2": r.terminals[3],
        },
        "demand_arcs": list(r.demand_arcs),
        "new_arcs": {str(aid): label for aid, label in sorted(r.arc_label.items())},
    }


def _cmd_gadget(args) -> int:
    text = FilePath(args.graph).read_text()
    if args.gadget_kind == "clique":
        gp = gadgets.parse_undirected_graph(text)
        g = gadgets.build_clique_gadget(gp, args.kprime)
        roles = _clique_roles_json(g)
    else:
        gp = gadgets.parse_directed_graph(text)
        g = gadgets.build_adp_gadget(gp, *args.terminals)
        roles = _adp_roles_json(g)
    inst_text = write_instance(g.instance)
    if args.json:
        print(json.dumps({"instance": inst_text, "roles": roles}, indent=2))
        return 0
    if args.output:
        FilePath(args.output).write_text(inst_text)
        roles_path = args.roles_out or args.output + ".roles.json"
        FilePath(roles_path).write_text(json.dumps(roles, indent=2))
    else:
        print(inst_text, end="")
        if args.roles_out:
            FilePath(args.roles_out).write_text(json.dumps(roles, indent=2))
    return 0


def _cmd_approx(args) -> int:
    import dataclasses
    from math import comb

    inst = _load_instance(args.instance)
    k = inst.k if args.k is None else args.k
    if not 0 <= k <= inst.m:
        raise RobustFlowError(f"k must be between 0 and {inst.m}")
    eval_inst = inst if k == inst.k else dataclasses.replace(inst, k=k)
    flow, guarantee = kroute.robust_baseline(inst, k)
    scenario, lam = worst_case_scenario(eval_inst, flow, args.budget)
    nominal = nominal_value(flow)
    obj = {
        "objective": format_rational(nominal - lam),
        "lambda": format_rational(lam),
        "flow": [
            {"path": list(p.arc_ids), "value": format_rational(v)}
            for p, v in flow.items()
        ],
        "worst_scenario": list(scenario.sorted_ids),
        "dual": None,
        "iterations": 1,
        "scenarios_generated": comb(eval_inst.m, eval_inst.k),
        "guarantee": format_rational(guarantee),
    }
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        _print_kv([
            ("robust value", obj["objective"]),
            ("guarantee", obj["guarantee"]),
            ("nominal", format_rational(nominal)),
        ])
        out = write_path_flow(flow)
        if out:
            print(out, end="")
    return 0


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    written = []
    for i in range(args.count):
        inst = generators.random_instance(
            rng, max_nodes=args.max_nodes, max_arcs=args.max_arcs
        )
        path = f"{args.output_prefix}{i}.rflow"
        FilePath(path).write_text(write_instance(inst))
        written.append(path)
    if args.json:
        print(json.dumps({"written": written}, indent=2))
    else:
        for path in written:
            print(path)
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "solve-lp": _cmd_solve_lp,
    "solve-int": _cmd_solve_int,
    "eval": _cmd_eval,
    "worst-case": _cmd_worst_case,
    "transform": _cmd_transform,
    "gadget": _cmd_gadget,
    "approx": _cmd_approx,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except BudgetError as exc:
        print(json.dumps({"error": "budget", "kind": type(exc).__name__,
                          "detail": str(exc)}))
        return 3
    except (RobustFlowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
