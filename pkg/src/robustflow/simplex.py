"""Dense exact simplex over rationals.

Canonical input: maximize c.x subject to A_ub x <= b_ub, A_eq x == b_eq,
x >= 0, with every coefficient an integer and all right-hand sides
nonnegative.  Inequality rows start from the all-slack basis; equality
rows go through a phase-1 simplex over artificial variables.

The tableau is stored as integer rows that each carry one positive
denominator, so pivoting is pure integer arithmetic and results are exact
Fractions.  Ratio tests compare cross-products, where the per-row
denominators cancel.  Bland's rule (smallest index enters, smallest basic
index leaves on ties) prevents cycling on the heavily degenerate
zero-right-hand-side rows this package produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass
class LpResult:
    status: str
    objective: Optional[Fraction]
    x: Optional[list[Fraction]]
    duals_ub: Optional[list[Fraction]]  # one nonnegative multiplier per <= row
    pivots: int


def _reduce(cells: list[int], den: int) -> tuple[list[int], int]:
    g = den
    for v in cells:
        if v:
            g = gcd(g, v)
            if g == 1:
                return cells, den
    if g > 1:
        cells = [v // g for v in cells]
        den //= g
    return cells, den


class _Tableau:
    """Rows are (cells, den) with real entry cells[j]/den; rhs is last."""

    def __init__(self, rows, dens, basis):
        self.rows: list[list[int]] = rows
        self.dens: list[int] = dens
        self.basis: list[int] = basis
        self.z: list[int] = []
        self.zden: int = 1
        self.pivots = 0

    def set_objective(self, c_full: Sequence[Fraction]) -> None:
        """Install the z-row for objective coefficients over all columns.

        c_full has one entry per variable column (no rhs).  The row is
        expressed in terms of the current basis.
        """
        width = len(c_full) + 1
        zf = [-Fraction(v) for v in c_full] + [Fraction(0)]
        for r, b in enumerate(self.basis):
            cb = c_full[b]
            if cb:
                cells, den = self.rows[r], self.dens[r]
                for j in range(width):
                    if cells[j]:
                        zf[j] += Fraction(cb * cells[j], den)
        den = lcm(*(f.denominator for f in zf))
        self.z = [int(f * den) for f in zf]
        self.zden = den

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        assert p > 0
        for i in range(len(self.rows)):
            if i == r:
                continue
            cells = self.rows[i]
            f = cells[c]
            if f:
                new = [p * a - f * b for a, b in zip(cells, prow)]
                new, nden = _reduce(new, self.dens[i] * p)
                self.rows[i] = new
                self.dens[i] = nden
        if self.z[c]:
            f = self.z[c]
            new = [p * a - f * b for a, b in zip(self.z, prow)]
            self.z, self.zden = _reduce(new, self.zden * p)
        self.rows[r], self.dens[r] = _reduce(list(prow), p)
        self.basis[r] = c
        self.pivots += 1

    def run_bland(self, ncols: int, max_pivots: int) -> str:
        rhs = ncols  # rhs sits right after the variable columns
        while True:
            z = self.z
            entering = -1
            for j in range(ncols):
                if z[j] < 0:
                    entering = j
                    break
            if entering < 0:
                return OPTIMAL
            leave = -1
            ln = ld = 0  # current best ratio ln/ld
            for i, cells in enumerate(self.rows):
                a = cells[entering]
                if a > 0:
                    num = cells[rhs]
                    better = False
                    if leave < 0:
                        better = True
                    else:
                        lhs = num * ld
                        rhs_cmp = ln * a
                        if lhs < rhs_cmp:
                            better = True
                        elif lhs == rhs_cmp and self.basis[i] < self.basis[leave]:
                            better = True
                    if better:
                        leave, ln, ld = i, num, a
            if leave < 0:
                return UNBOUNDED
            self.pivot(leave, entering)
            if self.pivots > max_pivots:
                raise RuntimeError(f"simplex exceeded {max_pivots} pivots")

    def value(self, r: int) -> Fraction:
        return Fraction(self.rows[r][-1], self.dens[r])


def solve_lp(
    c: Sequence[int],
    a_ub: Sequence[Sequence[int]],
    b_ub: Sequence[int],
    a_eq: Sequence[Sequence[int]] = (),
    b_eq: Sequence[int] = (),
    max_pivots: int = 2_000_000,
) -> LpResult:
    """Maximize c.x with A_ub x <= b_ub, A_eq x == b_eq, x >= 0, exactly."""
    n = len(c)
    n_ub, n_eq = len(a_ub), len(a_eq)
    if any(b < 0 for b in b_ub) or any(b < 0 for b in b_eq):
        raise ValueError("right-hand sides must be nonnegative")

    n_art = n_eq
    width = n + n_ub + n_art + 1
    rows: list[list[int]] = []
    dens: list[int] = []
    basis: list[int] = []
    for i in range(n_ub):
        row = list(a_ub[i]) + [0] * (n_ub + n_art + 1)
        row[n + i] = 1
        row[-1] = int(b_ub[i])
        rows.append(row)
        dens.append(1)
        basis.append(n + i)
    for j in range(n_eq):
        row = list(a_eq[j]) + [0] * (n_ub + n_art + 1)
        row[n + n_ub + j] = 1
        row[-1] = int(b_eq[j])
        rows.append(row)
        dens.append(1)
        basis.append(n + n_ub + j)
    assert all(len(r) == width for r in rows)

    tab = _Tableau(rows, dens, basis)
    ncols = width - 1

    if n_eq:
        # Phase 1: drive the artificial variables to zero.
        c1 = [Fraction(0)] * (n + n_ub) + [Fraction(-1)] * n_art
        tab.set_objective(c1)
        status = tab.run_bland(ncols, max_pivots)
        assert status == OPTIMAL, "phase 1 is bounded by construction"
        if Fraction(tab.z[-1], tab.zden) != 0:
            return LpResult(INFEASIBLE, None, None, None, tab.pivots)
        # Pivot remaining artificials out of the basis; drop rows whose
        # real columns are all zero (redundant equalities).
        drop = []
        for r in range(len(tab.rows)):
            if tab.basis[r] >= n + n_ub:
                cells = tab.rows[r]
                col = next((j for j in range(n + n_ub) if cells[j]), None)
                if col is None:
                    drop.append(r)
                else:
                    if cells[col] < 0:
                        # Basic value is zero, so pivoting on a negative
                        # entry keeps the tableau feasible; flip the row
                        # to keep pivot elements positive.
                        tab.rows[r] = [-v for v in cells]
                        cells = tab.rows[r]
                    tab.pivot(r, col)
        for r in sorted(drop, reverse=True):
            del tab.rows[r]
            del tab.dens[r]
            del tab.basis[r]
        # Remove artificial columns.
        keep = n + n_ub
        for i in range(len(tab.rows)):
            tab.rows[i] = tab.rows[i][:keep] + [tab.rows[i][-1]]
        ncols = keep

    c_full = [Fraction(v) for v in c] + [Fraction(0)] * n_ub
    tab.set_objective(c_full)
    status = tab.run_bland(ncols, max_pivots)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, None, None, None, tab.pivots)

    x = [Fraction(0)] * n
    for r, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.value(r)
    objective = Fraction(tab.z[-1], tab.zden)
    duals = [Fraction(tab.z[n + i], tab.zden) for i in range(n_ub)]
    return LpResult(OPTIMAL, objective, x, duals, tab.pivots)
