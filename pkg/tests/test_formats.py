from fractions import Fraction

import pytest

from robustflow.errors import FormatError
from robustflow.formats import (
    format_rational,
    parse_instance,
    parse_path_flow,
    parse_scenario,
    write_instance,
    write_path_flow,
    write_scenario,
)
from robustflow.model import INF, Path, PathFlow, Scenario


DIAMOND_TEXT = """\
# the diamond fixture
p rflow 4 4 1
s 0
t 3
a 0 1 1
a 0 2 1
a 1 3 1
a 2 3 1
"""


def test_instance_round_trip():
    inst = parse_instance(DIAMOND_TEXT)
    assert inst.node_count == 4 and inst.m == 4 and inst.k == 1
    assert parse_instance(write_instance(inst)) == inst


def test_capacity_forms():
    text = "p rflow 2 3 1\ns 0\nt 1\na 0 1 INF\na 0 1 7\na 0 1 3/4\n"
    inst = parse_instance(text)
    assert inst.arcs[0].capacity is INF or inst.arcs[0].capacity.is_infinite
    assert inst.arcs[1].capacity.value == 7
    assert inst.arcs[2].capacity.value == Fraction(3, 4)
    assert parse_instance(write_instance(inst)) == inst


@pytest.mark.parametrize(
    "text",
    [
        "p rflow 2 1 1\ns 0\nt 1\nq 0 1 1\n",        # unknown record
        "s 0\nt 1\n",                                  # record before header
        "p rflow 2 1 1\ns 0\nt 1\n",                   # arc count mismatch
        "p rflow 2 1 1\np rflow 2 1 1\ns 0\nt 1\na 0 1 1\n",  # duplicate header
        "p rflow 2 1 1\ns 0\nt 1\na 0 5 1\n",          # endpoint out of range
        "p rflow 2 1 1\ns 0\nt 1\na 0 1 -2\n",         # negative capacity
        "p rflow 2 1 1\ns 0\nt 1\na 0 1 1.5\n",        # float capacity
    ],
)
def test_strict_parsing(text):
    with pytest.raises(FormatError):
        parse_instance(text)


def test_path_flow_round_trip():
    flow = PathFlow.from_dict(
        {Path((0, 2)): Fraction(1), Path((1, 3)): Fraction(1, 2)}
    )
    text = write_path_flow(flow)
    assert text == "f 0 2 : 1/1\nf 1 3 : 1/2\n"
    assert parse_path_flow(text) == flow


def test_path_flow_rejects_duplicates():
    with pytest.raises(FormatError):
        parse_path_flow("f 0 : 1\nf 0 : 2\n")


def test_scenario_round_trip():
    sc = Scenario.of([3, 0])
    assert write_scenario(sc) == "S 0 3\n"
    assert parse_scenario(write_scenario(sc)) == sc


def test_format_rational_lowest_terms():
    assert format_rational(Fraction(4, 8)) == "1/2"
    assert format_rational(Fraction(2)) == "2/1"
