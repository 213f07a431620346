"""Uniform multi-route flows and the resulting robustness baseline.

A flow is h-uniform when no arc carries more than a 1/h fraction of the
total value; failing any single arc then destroys at most that fraction.
Maximizing a (k+1)-uniform flow therefore guarantees a surviving value of
value/(k+1) against k failures, by the union bound, and is a simple
(k+1)-approximation baseline for the robust optimum.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import simplex
from .graphs import path_decompose
from .model import Instance, PathFlow


def max_uniform_flow(inst: Instance, h: int) -> tuple[Fraction, PathFlow]:
    """Maximum value F of a flow with every arc flow at most F/h; exact.

    Solved as one LP over arc variables plus F: conservation equalities,
    capacity rows, and per-arc uniformity rows h*x_e - F <= 0.  The arc
    solution is decomposed into paths (cycle mass is dropped, which keeps
    both the value and the uniformity bound intact).
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    caps = inst.finite_capacities()
    scale = lcm(*(c.denominator for c in caps.values())) if caps else 1
    m = inst.m
    n = m + 1  # x_e per arc, then F
    a_eq: list[list[int]] = []
    b_eq: list[int] = []
    for node in range(inst.node_count):
        if node in (inst.source, inst.sink):
            continue
        row = [0] * n
        for arc in inst.in_arcs[node]:
            row[arc.arc_id] += 1
        for arc in inst.out_arcs[node]:
            row[arc.arc_id] -= 1
        a_eq.append(row)
        b_eq.append(0)
    row = [0] * n
    for arc in inst.out_arcs[inst.source]:
        row[arc.arc_id] -= 1
    for arc in inst.in_arcs[inst.source]:
        row[arc.arc_id] += 1
    row[m] = 1  # F equals the net outflow of the source
    a_eq.append(row)
    b_eq.append(0)
    a_ub: list[list[int]] = []
    b_ub: list[int] = []
    for arc in inst.arcs:
        cap_row = [0] * n
        cap_row[arc.arc_id] = 1
        a_ub.append(cap_row)
        b_ub.append(int(caps[arc.arc_id] * scale))
        uni_row = [0] * n
        uni_row[arc.arc_id] = h
        uni_row[m] = -1
        a_ub.append(uni_row)
        b_ub.append(0)
    c = [0] * m + [1]
    res = simplex.solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    if res.status != simplex.OPTIMAL:
        raise RuntimeError(f"unexpected LP status {res.status}")
    arc_flow = {i: res.x[i] / scale for i in range(m) if res.x[i]}
    value = res.x[m] / scale
    flow = path_decompose(inst, arc_flow)
    return value, flow


def robust_baseline(inst: Instance, k: int) -> tuple[PathFlow, Fraction]:
    """A (k+1)-uniform maximum flow and its guaranteed surviving value.

    The guarantee is value/(k+1): k failures destroy at most k arcs'
    worth of flow, each at most value/(k+1) by uniformity.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    value, flow = max_uniform_flow(inst, k + 1)
    return flow, value / (k + 1)
