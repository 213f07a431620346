import dataclasses
import random
from fractions import Fraction
from itertools import combinations

import pytest

from robustflow.errors import EnumerationBudgetExceeded
from robustflow.evaluation import (
    arc_flow_value,
    destroyed_value,
    nominal_value,
    robust_value,
    worst_case_scenario,
)
from robustflow.generators import random_instance
from robustflow.graphs import max_flow, path_decompose
from robustflow.model import Path, PathFlow, Scenario


def flow_of(*entries):
    return PathFlow.from_dict({Path(tuple(ids)): Fraction(v) for ids, v in entries})


class TestPointwiseOps:
    def test_nominal(self):
        assert nominal_value(PathFlow.zero()) == 0
        assert nominal_value(flow_of(((0, 2), 1), ((1, 3), 1))) == 2
        f = flow_of(((0,), 1), ((1,), Fraction(1, 2)), ((2,), Fraction(1, 3)))
        assert nominal_value(f) == Fraction(11, 6)

    def test_arc_flow_value(self):
        f = flow_of(((0, 2), 1), ((1, 3), 1))
        assert arc_flow_value(f, 0) == 1
        assert arc_flow_value(f, 9) == 0
        g = flow_of(((0, 1), Fraction(1, 2)), ((0, 2), Fraction(1, 3)))
        assert arc_flow_value(g, 0) == Fraction(5, 6)

    def test_destroyed_counts_paths_once(self):
        f = flow_of(((0, 2), 1), ((1, 3), 1))
        assert destroyed_value(f, Scenario.of([0, 2])) == 1
        assert destroyed_value(f, Scenario.of([0, 1])) == 2
        t = flow_of(((0,), 1), ((1,), 1), ((2,), 1))
        assert destroyed_value(t, Scenario.of([0])) == 1


class TestWorstCase:
    def test_triple_tiebreak(self, triple):
        f = flow_of(((0,), 1), ((1,), 1), ((2,), 1))
        scenario, lam = worst_case_scenario(triple, f, 100)
        assert lam == 1 and scenario == Scenario.of([0])

    def test_dominant_path(self):
        from robustflow.model import Instance

        inst = Instance.build(2, [(0, 1, 2), (0, 1, 1)], 0, 1, 1)
        f = flow_of(((0,), 2), ((1,), 1))
        scenario, lam = worst_case_scenario(inst, f, 100)
        assert lam == 2 and scenario == Scenario.of([0])

    def test_diamond_k2(self, diamond):
        inst = dataclasses.replace(diamond, k=2)
        f = flow_of(((0, 2), 1), ((1, 3), 1))
        _, lam = worst_case_scenario(inst, f, 100)
        assert lam == 2

    def test_budget_gate(self, triple):
        f = flow_of(((0,), 1))
        with pytest.raises(EnumerationBudgetExceeded):
            worst_case_scenario(triple, f, budget=2)

    def test_matches_second_enumeration_order(self):
        # independent check: enumerate scenarios in reverse order, naive sums
        rng = random.Random(21)
        for _ in range(15):
            inst = random_instance(rng, max_arcs=9)
            _, arc_flow = max_flow(inst)
            x = path_decompose(inst, arc_flow)
            scenario, lam = worst_case_scenario(inst, x, 10**6)
            alt = max(
                destroyed_value(x, Scenario.of(ids))
                for ids in reversed(list(combinations(range(inst.m), inst.k)))
            )
            assert lam == alt
            # returned witness is the lexicographically smallest argmax
            for ids in combinations(range(inst.m), inst.k):
                val = destroyed_value(x, Scenario.of(ids))
                assert val <= lam
                if ids == scenario.sorted_ids:
                    assert val == lam
                    break
                assert val < lam

    def test_monotonicity_in_failure_sets(self):
        rng = random.Random(22)
        for _ in range(10):
            inst = random_instance(rng, max_arcs=8)
            _, arc_flow = max_flow(inst)
            x = path_decompose(inst, arc_flow)
            for ids in combinations(range(inst.m), min(2, inst.m)):
                small = destroyed_value(x, Scenario.of(ids[:1]))
                assert small <= destroyed_value(x, Scenario.of(ids))

    def test_union_bound(self):
        rng = random.Random(23)
        for _ in range(10):
            inst = random_instance(rng, max_arcs=8)
            _, arc_flow = max_flow(inst)
            x = path_decompose(inst, arc_flow)
            for ids in combinations(range(inst.m), inst.k):
                sc = Scenario.of(ids)
                bound = sum(arc_flow_value(x, a) for a in ids)
                assert destroyed_value(x, sc) <= bound


class TestRobustValue:
    def test_triple(self, triple):
        f = flow_of(((0,), 1), ((1,), 1), ((2,), 1))
        assert robust_value(triple, f) == 2

    def test_diamond_brute(self, diamond):
        f = flow_of(((0, 2), 1), ((1, 3), 1))
        assert robust_value(diamond, f) == 1

    def test_zero_when_cut_at_most_k(self, diamond):
        inst = dataclasses.replace(diamond, k=2)
        f = flow_of(((0, 2), 1), ((1, 3), 1))
        assert robust_value(inst, f) == 0

    def test_bounds(self):
        rng = random.Random(24)
        for _ in range(10):
            inst = random_instance(rng, max_arcs=8)
            _, arc_flow = max_flow(inst)
            x = path_decompose(inst, arc_flow)
            _, lam = worst_case_scenario(inst, x, 10**6)
            assert 0 <= lam <= nominal_value(x)
            assert robust_value(inst, x) == nominal_value(x) - lam
