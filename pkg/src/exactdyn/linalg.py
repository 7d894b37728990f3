"""Exact linear algebra over Z and Q.

Matrices are tuples of row tuples.  Determinants of integer matrices use
fraction-free Bareiss elimination; characteristic polynomials go through
evaluation at integer points followed by exact Newton interpolation, so no
polynomial-matrix arithmetic is ever performed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .intpoly import IntPoly

Mat = tuple[tuple, ...]
Vec = tuple


def to_matrix(rows: Sequence[Sequence]) -> Mat:
    return tuple(tuple(r) for r in rows)


def identity(n: int, one=1) -> Mat:
    return tuple(tuple(one if i == j else 0 * one for j in range(n)) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(k, a: Mat) -> Mat:
    return tuple(tuple(k * x for x in row) for row in a)


def mat_pow(a: Mat, e: int) -> Mat:
    n = len(a)
    result = identity(n)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(tuple(ra) == tuple(rb) for ra, rb in zip(a, b))


def is_square(a: Mat) -> bool:
    return all(len(row) == len(a) for row in a)


# -- determinants -------------------------------------------------------------

def bareiss_det(a: Mat) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def frac_det(a: Mat) -> Fraction:
    """Determinant of a rational matrix."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in a:
        den = math.lcm(*(Fraction(x).denominator for x in row))
        scale /= den
        int_rows.append(tuple(int(Fraction(x) * den) for x in row))
    return scale * bareiss_det(tuple(int_rows))


# -- characteristic polynomial -------------------------------------------------

def _newton_interpolate(xs: list[int], ys: list) -> list[Fraction]:
    """Coefficients (ascending) of the interpolating polynomial."""
    n = len(xs)
    divided = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    # Horner expansion of the Newton form
    coeffs = [Fraction(0)] * n
    coeffs[0] = divided[n - 1]
    for i in range(n - 2, -1, -1):
        new = [Fraction(0)] * n
        for j in range(n - 1):
            new[j + 1] += coeffs[j]
            new[j] -= xs[i] * coeffs[j]
        new[0] += divided[i]
        coeffs = new
    return coeffs


def char_poly(m: Mat) -> IntPoly:
    """det(xI - M) for a square integer matrix, by evaluation-interpolation."""
    if not is_square(m):
        raise ValueError("char_poly requires a square matrix")
    n = len(m)
    if n == 0:
        return IntPoly([1])
    xs = list(range(n + 1))
    ys = []
    for k in xs:
        shifted = tuple(
            tuple((k if i == j else 0) - m[i][j] for j in range(n)) for i in range(n)
        )
        ys.append(bareiss_det(shifted))
    coeffs = _newton_interpolate(xs, ys)
    assert all(f.denominator == 1 for f in coeffs)
    return IntPoly(int(f) for f in coeffs)


# -- resultants and root composition --------------------------------------------

def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of two integer polynomials via the Sylvester determinant."""
    n, m = f.degree, g.degree
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append(tuple([0] * i + fc + [0] * (size - n - 1 - i)))
    for i in range(n):
        rows.append(tuple([0] * i + gc + [0] * (size - m - 1 - i)))
    return bareiss_det(tuple(rows))


def product_root_poly(p: IntPoly) -> IntPoly:
    """Polynomial whose roots are all pairwise products of roots of p
    (including squares), computed as Res_y(p(y), y^n p(x/y)) by
    evaluation-interpolation.  Requires p(0) != 0."""
    n = p.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    if p.coeffs[0] == 0:
        raise ValueError("requires nonzero constant term")
    deg = n * n
    xs = list(range(deg + 1))
    ys = []
    for x0 in xs:
        # g(y) = sum_k a_k x0^k y^(n-k); leading y-coefficient is a_0 != 0
        g = IntPoly(list(reversed([p.coeffs[k] * x0 ** k for k in range(n + 1)])))
        ys.append(resultant(p, g))
    coeffs = _newton_interpolate(xs, ys)
    assert all(f.denominator == 1 for f in coeffs)
    q = IntPoly(int(f) for f in coeffs)
    return q.primitive()


def even_square_poly(p: IntPoly) -> IntPoly:
    """Polynomial whose roots are the squares of the roots of p."""
    h = p * p.compose_neg()
    assert all(c == 0 for i, c in enumerate(h.coeffs) if i % 2 == 1)
    return IntPoly(h.coeffs[::2]).primitive()


def plus_minus_poly(p: IntPoly) -> IntPoly:
    """p(x) * p(-x): roots of p together with their negatives."""
    return (p * p.compose_neg()).primitive()


# -- rational elimination --------------------------------------------------------

def rref(a: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def kernel_basis(a: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel of a rational matrix."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [tuple(Fraction(1) if i == j else Fraction(0) for i in range(cols))
                for j in range(cols)]
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of Ax = b over Q, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(bv)] for row, bv in zip(a, b)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        if pc == cols:
            return None
        x[pc] = red[r][-1]
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(1) if i == j else Fraction(0)
                                       for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))


def column_space_basis(a: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Basis of the column space of a rational matrix."""
    _, pivots = rref(a)
    cols = transpose(to_matrix(a))
    return [tuple(Fraction(x) for x in cols[c]) for c in pivots]


def clear_denominators(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (positive scale)."""
    fr = [Fraction(x) for x in v]
    den = math.lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = math.gcd(*ints) if any(ints) else 1
    return tuple(c // g for c in ints) if g else tuple(ints)


def primitive_ray(v: Sequence) -> tuple[int, ...]:
    """Primitive integer representative of the ray through v (positive scaling)."""
    return clear_denominators(v)


# -- Smith normal form ------------------------------------------------------------

def smith_normal_form(a: Mat) -> list[int]:
    """Nonnegative elementary divisors d_1 | d_2 | ... of an integer matrix,
    padded with zeros up to min(rows, cols)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    k = min(rows, cols)
    diag = []
    t = 0
    while t < k:
        # locate the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = m[t][t]
            done = True
            for i in range(t + 1, rows):
                q = m[i][t] // pivot
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t] != 0:
                    done = False
            for j in range(t + 1, cols):
                q = m[t][j] // pivot
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j] != 0:
                    done = False
            if done:
                break
            # a smaller remainder appeared; re-pivot on it
            best = (t, t)
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] != 0 and abs(m[i][j]) < abs(m[best[0]][best[1]]):
                        best = (i, j)
            bi, bj = best
            m[t], m[bi] = m[bi], m[t]
            for row in m:
                row[t], row[bj] = row[bj], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    diag += [0] * (k - len(diag))
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a_, b_ = diag[i], diag[i + 1]
            if a_ and b_ and b_ % a_ != 0:
                g = math.gcd(a_, b_)
                diag[i], diag[i + 1] = g, a_ * b_ // g
                changed = True
            elif a_ == 0 and b_ != 0:
                diag[i], diag[i + 1] = b_, 0
                changed = True
    return diag


def integer_kernel(a: Mat) -> list[tuple[int, ...]]:
    """Primitive integer vectors spanning the rational kernel."""
    return [clear_denominators(v) for v in kernel_basis(a)]
