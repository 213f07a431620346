import dataclasses
from fractions import Fraction

import pytest

from robustflow.errors import InfiniteCapacity
from robustflow.model import (
    INF,
    ExtendedRational,
    Instance,
    Path,
    PathFlow,
    validate_instance,
)


class TestExtendedRational:
    def test_float_rejected(self):
        with pytest.raises(TypeError):
            ExtendedRational(0.5)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ExtendedRational(-1)

    def test_inf_dominates(self):
        assert INF > ExtendedRational(10**9)
        assert not INF < INF
        assert INF + ExtendedRational(3) is INF or (INF + ExtendedRational(3)).is_infinite

    def test_inf_value_raises(self):
        with pytest.raises(InfiniteCapacity):
            INF.value

    def test_parse_and_str(self):
        assert str(ExtendedRational.parse("3/4")) == "3/4"
        assert str(ExtendedRational.parse("7")) == "7"
        assert str(ExtendedRational.parse("INF")) == "INF"
        assert ExtendedRational.parse("6/4") == ExtendedRational(Fraction(3, 2))

    def test_scaling(self):
        assert ExtendedRational(Fraction(1, 3)) * 9 == ExtendedRational(3)
        assert (INF * 5).is_infinite


class TestValidateInstance:
    def test_diamond_is_valid(self, diamond):
        assert validate_instance(diamond) == []

    def test_source_equals_sink(self):
        inst = Instance.build(2, [(0, 1, 1)], 0, 0, 1)
        assert "source equals sink" in validate_instance(inst)

    def test_k_exceeds_arc_count(self, triple):
        inst = dataclasses.replace(triple, k=4)
        assert "k exceeds arc count" in validate_instance(inst)

    def test_self_loop_and_ranges(self):
        inst = Instance.build(3, [(1, 1, 1), (0, 2, 1)], 0, 2, 1)
        report = validate_instance(inst)
        assert any("self-loop" in r for r in report)

    def test_nonconsecutive_ids(self):
        from robustflow.model import Arc

        inst = Instance(2, (Arc(5, 0, 1, ExtendedRational(1)),), 0, 1, 1)
        assert any("consecutive" in r for r in validate_instance(inst))


class TestPathFlow:
    def test_zero_values_dropped(self):
        flow = PathFlow.from_dict({Path((0,)): Fraction(0), Path((1,)): Fraction(2)})
        assert len(flow) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            PathFlow.from_dict({Path((0,)): Fraction(-1)})

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            PathFlow.from_dict({Path((0,)): 0.5})

    def test_entries_sorted(self):
        flow = PathFlow.from_dict({Path((2,)): Fraction(1), Path((0, 1)): Fraction(1)})
        assert [p.arc_ids for p, _ in flow.items()] == [(0, 1), (2,)]

    def test_arc_flows(self):
        flow = PathFlow.from_dict(
            {Path((0, 2)): Fraction(1, 2), Path((0, 3)): Fraction(1, 3)}
        )
        assert flow.arc_flows()[0] == Fraction(5, 6)

    def test_feasibility(self, triple):
        ok = PathFlow.from_dict({Path((0,)): Fraction(1)})
        assert ok.feasibility_violations(triple) == []
        bad = PathFlow.from_dict({Path((0,)): Fraction(2)})
        assert len(bad.feasibility_violations(triple)) == 1
