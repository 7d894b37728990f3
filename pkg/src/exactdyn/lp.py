"""Exact rational linear programming.

A small dense two-phase simplex over Fraction with Bland's rule, sized for
the cones that show up here (dimension <= 6, a handful of generators).
Every decision path that matters is exact; there is no floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def solve_lp(a: Sequence[Sequence], b: Sequence, c: Sequence):
    """min c.x subject to Ax = b, x >= 0.

    Returns (status, x, value); x and value are None unless status is
    OPTIMAL.  Deterministic (Bland's rule).
    """
    a = [[Fraction(v) for v in row] for row in a]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    m, n = len(a), len(c)
    for i in range(m):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]
    # tableau columns: n original + m artificial + rhs
    tab = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [b[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]

    def pivot(row: int, col: int) -> None:
        pv = tab[row][col]
        tab[row] = [v / pv for v in tab[row]]
        for r in range(m):
            if r != row and tab[r][col] != 0:
                f = tab[r][col]
                tab[r] = [v - f * w for v, w in zip(tab[r], tab[row])]
        basis[row] = col

    def run_phase(cost: list[Fraction]) -> str:
        while True:
            # reduced costs relative to the current basis
            lam = [cost[basis[r]] for r in range(m)]
            entering = None
            for j in range(len(cost)):
                if j in basis:
                    continue
                red = cost[j] - sum(lam[r] * tab[r][j] for r in range(m))
                if red < 0:
                    entering = j
                    break  # Bland: smallest index
            if entering is None:
                return OPTIMAL
            leaving = None
            best = None
            for r in range(m):
                if tab[r][entering] > 0:
                    ratio = tab[r][-1] / tab[r][entering]
                    if best is None or ratio < best or (
                            ratio == best and basis[r] < basis[leaving]):
                        best, leaving = ratio, r
            if leaving is None:
                return UNBOUNDED
            pivot(leaving, entering)

    phase1_cost = [Fraction(0)] * n + [Fraction(1)] * m
    status = run_phase(phase1_cost)
    assert status == OPTIMAL  # phase 1 is bounded below by 0
    if sum(tab[r][-1] for r in range(m) if basis[r] >= n) > 0:
        return INFEASIBLE, None, None
    # drive any zero-level artificials out of the basis
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j] != 0), None)
            if col is not None:
                pivot(r, col)
    # drop redundant rows still pivoted on artificials
    keep = [r for r in range(m) if basis[r] < n]
    if len(keep) < m:
        tab[:] = [tab[r] for r in keep]
        basis[:] = [basis[r] for r in keep]
        m = len(keep)
    # blank out artificial columns for phase 2
    for r in range(m):
        tab[r] = tab[r][:n] + [tab[r][-1]]
    phase2_cost = list(c)
    status = run_phase(phase2_cost)
    if status != OPTIMAL:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for r in range(m):
        x[basis[r]] = tab[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, tuple(x), value


def lp_feasible(a: Sequence[Sequence], b: Sequence):
    """A feasible point of {Ax = b, x >= 0}, or None."""
    n = len(a[0]) if a else 0
    status, x, _ = solve_lp(a, b, [Fraction(0)] * n)
    return x if status == OPTIMAL else None


def lp_maximize(a: Sequence[Sequence], b: Sequence, objective: Sequence):
    """max objective.x subject to Ax = b, x >= 0."""
    status, x, value = solve_lp(a, b, [-Fraction(v) for v in objective])
    return status, x, (None if value is None else -value)
