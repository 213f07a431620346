"""Acceptance suite: one test per criterion, every check exact (tolerance 0).

Each test prints a single "criterion N PASS" line (visible with -s); a
failing assert is the corresponding FAIL.  Corpora are seeded, so every
run sees the same instances.
"""

import random
import time
from math import comb

import pytest

from robustflow.cli import main as cli_main
from robustflow.evaluation import destroyed_value, nominal_value, robust_value
from robustflow.gadgets import (
    EPS_ROUTE,
    ZERO_ROUTE,
    DirectedGraph,
    UndirectedGraph,
    adp_witness_flow,
    audit_clique_gadget,
    build_adp_gadget,
    build_clique_gadget,
    canonical_gadget_flow,
    disjoint_paths_oracle,
    f_top,
    h_star,
    structured_lambda,
    structured_scenario,
)
from robustflow.generators import random_instance
from robustflow.graphs import enumerate_paths, max_flow, min_cut
from robustflow.kroute import robust_baseline
from robustflow.lp import solve_full_lp, solve_row_generation
from robustflow.model import ExtendedRational, Instance
from robustflow.special import (
    brute_force_integral,
    greedy_cut_interdiction,
    solve_integral_cap2,
    solve_unit_capacity,
)
from robustflow.transforms import map_flow_back, split_capacities

K3 = UndirectedGraph.build(3, [(0, 1), (0, 2), (1, 2)])
K4 = UndirectedGraph.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C5 = UndirectedGraph.build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
SINGLE_EDGE = UndirectedGraph.build(2, [(0, 1)])


def _pass(number, message):
    print(f"criterion {number:2d} PASS  {message}")


@pytest.fixture(scope="module")
def lp_corpus():
    rng = random.Random(101)
    return [random_instance(rng) for _ in range(50)]


def test_criterion_01_row_generation_matches_full_lp(lp_corpus):
    start = time.time()
    for inst in lp_corpus:
        assert inst.node_count <= 8 and inst.m <= 14 and inst.k <= 2
        assert all(a.capacity.value in (1, 2, 3) for a in inst.arcs)
        full = solve_full_lp(inst)
        rowgen = solve_row_generation(inst)
        assert full.primal.objective == rowgen.primal.objective
    elapsed = time.time() - start
    assert elapsed < 120, f"runtime {elapsed:.1f}s exceeds 2 minutes"
    _pass(1, f"50 instances, exact objective equality, {elapsed:.1f}s")


def test_criterion_02_zero_value_when_cut_within_budget(lp_corpus):
    unit = lambda inst: {a.arc_id: ExtendedRational(1) for a in inst.arcs}
    extra = [
        Instance.build(4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)], 0, 3, 2),
        Instance.build(3, [(0, 1, 3), (1, 2, 2)], 0, 2, 1),
        Instance.build(2, [(0, 1, 2), (0, 1, 3)], 0, 1, 2),
    ]
    checked = 0
    for inst in list(lp_corpus) + extra:
        cut_cardinality = len(min_cut(inst, unit(inst)).arc_ids)
        if cut_cardinality <= inst.k:
            assert solve_row_generation(inst).primal.objective == 0
            checked += 1
    assert checked >= 10
    _pass(2, f"{checked} instances with a cut of at most k arcs all solve to 0")


def test_criterion_03_unit_capacity_optimality():
    rng = random.Random(102)
    for _ in range(50):
        inst = random_instance(rng, cap_choices=(1,))
        flow, value = solve_unit_capacity(inst)
        cut = len(min_cut(inst).arc_ids)
        lp_value = solve_full_lp(inst).primal.objective
        assert value == lp_value == max(0, cut - inst.k)
        assert robust_value(inst, flow) == value
    _pass(3, "50 unit-capacity instances: solver = LP = max{0, |C| - k}")


@pytest.fixture(scope="module")
def cap2_corpus():
    rng = random.Random(103)
    corpus = []
    while len(corpus) < 50:
        inst = random_instance(
            rng, max_nodes=6, max_arcs=10, cap_choices=(1, 2), k_choices=(1, 2, 3)
        )
        if len(enumerate_paths(inst, 10**4)) <= 14:  # keep the oracle fast
            corpus.append(inst)
    return corpus


def test_criterion_04_capacity_two_exactness(cap2_corpus):
    for inst in cap2_corpus:
        assert inst.m <= 10 and inst.k <= 3
        flow, value = solve_integral_cap2(inst)
        _, oracle = brute_force_integral(inst, budget=5 * 10**5)
        assert value == oracle
        assert robust_value(inst, flow) == value
        _, trace = greedy_cut_interdiction(inst, flow)
        deltas = [d for _, d in trace]
        assert all(d in (0, 1, 2) for d in deltas)
        assert all(deltas[i] >= deltas[i + 1] for i in range(len(deltas) - 1))
    _pass(4, "50 instances: cap-2 solver = brute force; greedy deltas in {0,1,2} nonincreasing")


def test_criterion_05_split_transformation():
    rng = random.Random(104)
    for _ in range(30):
        inst = random_instance(rng, max_nodes=5, max_arcs=6)
        split, arc_map = split_capacities(inst)
        r_orig = solve_full_lp(inst)
        r_split = solve_full_lp(split)
        assert r_orig.primal.objective == r_split.primal.objective
        back = map_flow_back(inst, split, arc_map, r_split.primal.x)
        assert robust_value(inst, back) == robust_value(split, r_split.primal.x)
    _pass(5, "30 instances: split preserves the LP objective and mapped-back robust value")


def _adp_cases():
    crafted = [
        # two disjoint demand arcs
        (DirectedGraph.build(4, [(0, 1), (2, 3)]), True),
        # disjoint two-arc routes
        (DirectedGraph.build(6, [(0, 4), (4, 1), (2, 5), (5, 3)]), True),
        # arc-disjoint through a shared node
        (DirectedGraph.build(5, [(0, 4), (4, 1), (2, 4), (4, 3)]), True),
        # parallel arcs make the shared hop disjoint
        (DirectedGraph.build(6, [(0, 4), (4, 5), (4, 5), (5, 1), (2, 4), (5, 3)]), True),
        # single shared bridge arc
        (DirectedGraph.build(6, [(0, 4), (4, 5), (5, 1), (2, 4), (5, 3)]), False),
        # second demand has no route at all
        (DirectedGraph.build(4, [(0, 1)]), False),
        # no demand routes whatsoever
        (DirectedGraph.build(4, []), False),
        # crossing demands forced through one middle arc
        (DirectedGraph.build(6, [(0, 4), (2, 4), (4, 5), (5, 1), (5, 3)]), False),
    ]
    rng = random.Random(106)
    randoms = []
    while len(randoms) < 14:
        n = rng.randint(4, 6)
        arcs = []
        for _ in range(rng.randint(2, 8)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                arcs.append((u, v))
        randoms.append((DirectedGraph.build(n, arcs), None))
    return crafted + randoms


def test_criterion_06_adp_reduction_both_directions():
    cases = _adp_cases()
    assert len(cases) >= 20
    positives = 0
    for gp, expected in cases:
        start = time.time()
        gadget = build_adp_gadget(gp, 0, 1, 2, 3)
        pair = disjoint_paths_oracle(gp, 0, 1, 2, 3)
        if expected is not None:
            assert (pair is not None) == expected
        _, value = brute_force_integral(gadget.instance, budget=10**6)
        assert (value >= 3) == (pair is not None)
        if pair is not None:
            positives += 1
            witness = adp_witness_flow(gadget, *pair)
            assert nominal_value(witness) == 7
            assert robust_value(gadget.instance, witness) == 3
        assert time.time() - start < 60
    assert positives >= 4
    _pass(6, f"{len(cases)} inputs: integral optimum >= 3 iff disjoint paths exist "
             f"({positives} positive witnesses at value 7 / robust 3)")


def test_criterion_07_clique_gadget_audit():
    for graph, kp in ((K3, 3), (K4, 3), (C5, 3), (SINGLE_EDGE, 2)):
        gadget = build_clique_gadget(graph, kp)
        assert audit_clique_gadget(gadget) == []
    _pass(7, "K3, K4, C5 and single-edge gadgets pass the structural audit")


def test_criterion_08_witness_accounting():
    for graph, kp in ((K3, 3), (C5, 3)):
        gadget = build_clique_gadget(graph, kp)
        n_v, n_e = graph.node_count, len(graph.edges)
        hs = h_star(graph, kp)
        for variant in (ZERO_ROUTE, EPS_ROUTE):
            x = canonical_gadget_flow(gadget, variant)
            closed_form = (
                (n_v + 4 * n_e) * gadget.ell * gadget.big_m
                + kp * gadget.ell
                + f_top(x, gadget.roles.failure_pool, 2 * hs)
            )
            lam, ustar, fstar = structured_lambda(gadget, x)
            assert lam == closed_form
            witness = structured_scenario(gadget, ustar, fstar)
            assert destroyed_value(x, witness) == lam
    _pass(8, "K3 and C5, both flow variants: destroyed(S*) equals the closed form")


def test_criterion_09_decision_property():
    for graph, kp, has_clique in ((K3, 3, True), (K4, 3, True), (C5, 3, False)):
        gadget = build_clique_gadget(graph, kp)
        assert (h_star(graph, kp) == comb(kp, 2)) == has_clique
        objective = {}
        for variant in (ZERO_ROUTE, EPS_ROUTE):
            x = canonical_gadget_flow(gadget, variant)
            lam, _, _ = structured_lambda(gadget, x)
            objective[variant] = nominal_value(x) - lam
        gap = objective[EPS_ROUTE] - objective[ZERO_ROUTE]
        if has_clique:
            assert gap == gadget.eps
        else:
            assert gap == -gadget.eps
            assert objective[ZERO_ROUTE] >= objective[EPS_ROUTE]
    _pass(9, "eps-route minus zero-route objective: +eps with a clique, <= 0 without")


def test_criterion_10_kroute_baseline(lp_corpus):
    for inst in lp_corpus:
        flow, guarantee = robust_baseline(inst, inst.k)
        actual = robust_value(inst, flow)
        assert actual >= guarantee
        optimum = solve_full_lp(inst).primal.objective
        assert optimum <= (inst.k + 1) * actual
    _pass(10, "50 instances: guarantee sound and optimum <= (k+1) x baseline robust value")


def test_criterion_11_k1_simultaneity():
    rng = random.Random(107)
    for _ in range(30):
        inst = random_instance(rng, k_choices=(1,))
        base = solve_full_lp(inst)
        flow_value, _ = max_flow(inst)
        forced = solve_full_lp(inst, nominal_target=flow_value)
        assert forced.primal.objective == base.primal.objective
        assert nominal_value(forced.primal.x) == flow_value
    _pass(11, "30 k=1 instances: an optimal solution with nominal = max-flow value exists")


def test_criterion_12_cli_determinism(tmp_path, capsys):
    triple = tmp_path / "triple.rflow"
    triple.write_text("p rflow 2 3 1\ns 0\nt 1\na 0 1 1\na 0 1 1\na 0 1 1\n")
    frac = tmp_path / "frac.rflow"
    frac.write_text("p rflow 2 2 1\ns 0\nt 1\na 0 1 1/2\na 0 1 1/3\n")
    flow = tmp_path / "f.pathflow"
    flow.write_text("f 0 : 1\nf 1 : 1\nf 2 : 1\n")
    k3 = tmp_path / "k3.txt"
    k3.write_text("p graph 3 3\ne 0 1\ne 0 2\ne 1 2\n")
    adp = tmp_path / "adp.txt"
    adp.write_text("p digraph 4 2\na 0 1\na 2 3\n")
    commands = [
        ("validate", str(triple), "--json"),
        ("solve-lp", str(triple), "--json"),
        ("solve-lp", str(triple), "--json", "--engine", "full"),
        ("solve-int", str(triple), "--json"),
        ("eval", str(triple), "--flow", str(flow), "--json"),
        ("worst-case", str(triple), "--flow", str(flow), "--json"),
        ("transform", str(triple), "--mode", "split", "--json"),
        ("transform", str(frac), "--mode", "scale", "--json"),
        ("gadget", "clique", "--graph", str(k3), "--kprime", "3", "--json"),
        ("gadget", "adp", "--graph", str(adp), "--terminals", "0", "1", "2", "3", "--json"),
        ("approx", "kroute", str(triple), "--json"),
    ]
    for cmd in commands:
        outputs = set()
        for threads in ("1", "4"):
            for _ in range(2):
                code = cli_main(list(cmd) + ["--threads", threads])
                captured = capsys.readouterr()
                assert code == 0, cmd
                outputs.add(captured.out)
        assert len(outputs) == 1, f"nondeterministic output for {cmd}"
    _pass(12, f"{len(commands)} commands byte-identical across repeats and --threads 1/4")
