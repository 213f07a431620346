import functools
import sys
from fractions import Fraction

import pytest

from robustflow.model import Instance


@pytest.fixture
def diamond():
    # s -> a, s -> b, a -> t, b -> t, all capacity 1
    return Instance.build(4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)], 0, 3, 1)


@pytest.fixture
def triple():
    # three parallel unit arcs
    return Instance.build(2, [(0, 1, 1), (0, 1, 1), (0, 1, 1)], 0, 1, 1)


def dag_path_count(inst):
    """Independent dynamic-programming path-count oracle (DAGs only)."""
    sys.setrecursionlimit(10000)

    @functools.cache
    def count(v):
        if v == inst.sink:
            return 1
        return sum(count(arc.head) for arc in inst.out_arcs[v])

    return count(inst.source)


def nx_max_flow_value(inst) -> Fraction:
    """Independent max-flow value oracle via networkx on the scaled graph.

    Parallel arcs are merged by summing capacities, which preserves the
    max-flow value.
    """
    import networkx as nx
    from math import lcm

    caps = inst.finite_capacities()
    scale = lcm(*(c.denominator for c in caps.values())) if caps else 1
    g = nx.DiGraph()
    g.add_nodes_from(range(inst.node_count))
    for arc in inst.arcs:
        c = int(caps[arc.arc_id] * scale)
        if g.has_edge(arc.tail, arc.head):
            g[arc.tail][arc.head]["capacity"] += c
        else:
            g.add_edge(arc.tail, arc.head, capacity=c)
    value = nx.maximum_flow_value(g, inst.source, inst.sink)
    return Fraction(value, scale)
