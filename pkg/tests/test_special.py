import dataclasses
import random

import pytest

from robustflow.errors import (
    CapacityOutOfRange,
    EnumerationBudgetExceeded,
    NotUnitCapacity,
)
from robustflow.evaluation import nominal_value, robust_value
from robustflow.generators import random_instance
from robustflow.graphs import max_flow, min_cut, path_decompose
from robustflow.lp import solve_full_lp
from robustflow.model import Instance
from robustflow.special import (
    brute_force_integral,
    greedy_cut_interdiction,
    solve_integral_cap2,
    solve_unit_capacity,
)


class TestUnitCapacity:
    def test_triple(self, triple):
        _, value = solve_unit_capacity(triple)
        assert value == 2

    def test_diamond_k2(self, diamond):
        _, value = solve_unit_capacity(dataclasses.replace(diamond, k=2))
        assert value == 0

    def test_five_parallel(self):
        inst = Instance.build(2, [(0, 1, 1)] * 5, 0, 1, 2)
        _, value = solve_unit_capacity(inst)
        assert value == 3

    def test_rejects_nonunit(self):
        inst = Instance.build(2, [(0, 1, 2)], 0, 1, 1)
        with pytest.raises(NotUnitCapacity):
            solve_unit_capacity(inst)

    def test_flow_attains_value(self):
        rng = random.Random(41)
        for _ in range(15):
            inst = random_instance(rng, max_arcs=9, cap_choices=(1,))
            flow, value = solve_unit_capacity(inst)
            assert robust_value(inst, flow) == value

    def test_cut_bound_on_any_flow(self):
        rng = random.Random(42)
        for _ in range(15):
            inst = random_instance(rng, max_arcs=8, cap_choices=(1,))
            cut_size = len(min_cut(inst).arc_ids)
            _, arc_flow = max_flow(inst)
            x = path_decompose(inst, arc_flow)
            if cut_size <= inst.k:
                assert robust_value(inst, x) == 0
            else:
                assert robust_value(inst, x) <= cut_size - inst.k


class TestIntegralCap2:
    def test_two_parallel_cap2(self):
        inst = Instance.build(2, [(0, 1, 2), (0, 1, 2)], 0, 1, 1)
        flow, value = solve_integral_cap2(inst)
        assert value == 2  # max{0, 2-1, 4-2}
        assert robust_value(inst, flow) == value

    def test_single_route_dies(self):
        inst = Instance.build(3, [(0, 1, 2), (1, 2, 2)], 0, 2, 1)
        _, value = solve_integral_cap2(inst)
        assert value == 0  # max{0, 1-1, 2-2}

    def test_unit_case_reduces(self, triple):
        flow, value = solve_integral_cap2(triple)
        assert value == 2 and nominal_value(flow) == 3

    def test_rejects_out_of_range(self):
        inst = Instance.build(2, [(0, 1, 3)], 0, 1, 1)
        with pytest.raises(CapacityOutOfRange):
            solve_integral_cap2(inst)

    def test_matches_brute_force(self):
        rng = random.Random(43)
        for _ in range(15):
            inst = random_instance(
                rng, max_nodes=5, max_arcs=7, cap_choices=(1, 2), k_choices=(1, 2, 3)
            )
            flow, value = solve_integral_cap2(inst)
            _, brute = brute_force_integral(inst, budget=10**6)
            assert value == brute
            assert robust_value(inst, flow) == value


class TestGreedyInterdiction:
    def test_triple_k2(self, triple):
        inst = dataclasses.replace(triple, k=2)
        flow, _ = solve_unit_capacity(inst)
        chosen, trace = greedy_cut_interdiction(inst, flow)
        assert len(chosen) == 2
        assert [d for _, d in trace] == [1, 1]

    def test_parallel_cap2(self):
        inst = Instance.build(2, [(0, 1, 2), (0, 1, 2)], 0, 1, 1)
        _, arc_flow = max_flow(inst)
        x = path_decompose(inst, arc_flow)
        _, trace = greedy_cut_interdiction(inst, x)
        assert trace[0][1] == 2

    def test_exhausts_cut(self, diamond):
        inst = dataclasses.replace(diamond, k=2)
        flow, _ = solve_unit_capacity(inst)
        chosen, trace = greedy_cut_interdiction(inst, flow)
        assert chosen == min_cut(inst, {i: 1 for i in range(inst.m)}).arc_ids or len(chosen) == 2
        assert [d for _, d in trace] == [1, 1]

    def test_trace_shape_on_cap2_instances(self):
        rng = random.Random(44)
        for _ in range(15):
            inst = random_instance(
                rng, max_nodes=5, max_arcs=7, cap_choices=(1, 2), k_choices=(1, 2, 3)
            )
            flow, _ = solve_integral_cap2(inst)
            _, trace = greedy_cut_interdiction(inst, flow)
            deltas = [d for _, d in trace]
            assert all(d in (0, 1, 2) for d in deltas)
            assert all(deltas[i] >= deltas[i + 1] for i in range(len(deltas) - 1))


class TestBruteForce:
    def test_triple(self, triple):
        _, value = brute_force_integral(triple)
        assert value == 2

    def test_budget_gate(self, triple):
        with pytest.raises(EnumerationBudgetExceeded):
            brute_force_integral(triple, budget=2)

    def test_flow_is_feasible_and_attains(self):
        rng = random.Random(45)
        for _ in range(10):
            inst = random_instance(rng, max_nodes=5, max_arcs=6, cap_choices=(1, 2))
            flow, value = brute_force_integral(inst, budget=10**6)
            assert flow.feasibility_violations(inst) == []
            assert robust_value(inst, flow) == value
            assert all(v.denominator == 1 for _, v in flow.items())

    def test_never_beaten_by_lp_rounding(self):
        # integral optimum is at most the fractional LP optimum
        rng = random.Random(46)
        for _ in range(8):
            inst = random_instance(rng, max_nodes=5, max_arcs=6, cap_choices=(1, 2))
            _, value = brute_force_integral(inst, budget=10**6)
            assert value <= solve_full_lp(inst).primal.objective


class TestUnitMatchesLp:
    def test_equality(self):
        rng = random.Random(47)
        for _ in range(10):
            inst = random_instance(rng, max_arcs=8, cap_choices=(1,))
            _, value = solve_unit_capacity(inst)
            report = solve_full_lp(inst)
            cut = len(min_cut(inst).arc_ids)
            assert value == report.primal.objective == max(0, cut - inst.k)
