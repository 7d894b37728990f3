"""Dynamical classification of endomorphisms of E^n given by integer matrices.

The model: a non-CM elliptic curve E, A = E^n, and f(x) = Mx for an integer
matrix M with det(M) != 0.  Under this model NS(A) is the space of symmetric
n x n matrices, f* acts by S |-> M^T S M, and the nef cone is the cone of
positive-semidefinite forms.  Every criterion below reduces to exact integer
or rational linear algebra on M.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algnum import AlgebraicRadius, isolate_largest_real_root, maxroots_equal
from .common import EntropyClass, InputError, SearchFailed, TranslationUnsupported
from .intpoly import (IntPoly, cyclotomic, cyclotomic_divisors,
                      is_cyclotomic_product, sturm_count, totient,
                      unit_circle_root_count)
from .linalg import (bareiss_det, char_poly, even_square_poly, identity,
                     inverse as mat_inverse, kernel_basis, mat_eq, mat_mul,
                     mat_pow, mat_sub, plus_minus_poly, product_root_poly,
                     smith_normal_form, solve, to_matrix, transpose)

RADIUS_WIDTH = Fraction(1, 10 ** 6)


@dataclass(frozen=True)
class EndoSpec:
    """A surjective endomorphism of E^n: f(x) = Mx (+ an optional translation
    carried only as a flag; its value is irrelevant to every criterion)."""
    n: int
    matrix: tuple[tuple[int, ...], ...]
    has_translation: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be a positive integer")
        m = to_matrix(self.matrix)
        if len(m) != self.n or any(len(r) != self.n for r in m):
            raise InputError(f"matrix must be {self.n}x{self.n}")
        object.__setattr__(self, "matrix", m)
        if bareiss_det(m) == 0:
            raise InputError("det(M) = 0: not surjective")


@dataclass(frozen=True)
class DynReport:
    degree: int
    amplified: bool
    pcd: bool
    entropy: EntropyClass
    dense_orbit: bool
    spectral_radius: Optional[AlgebraicRadius] = None
    matrix_radius: Optional[AlgebraicRadius] = None

    def __post_init__(self):
        assert not self.amplified or self.pcd
        assert not self.pcd or self.entropy == EntropyClass.POSITIVE
        assert self.entropy == EntropyClass.POSITIVE or self.degree == 1
        assert self.dense_orbit == self.pcd


def degree(spec: EndoSpec) -> int:
    """deg f = det(M)^2 (the square comes from H^1 having rank 2n)."""
    return bareiss_det(spec.matrix) ** 2


def classify(spec: EndoSpec, with_radius: bool = True) -> DynReport:
    """Full dynamical classification from the characteristic polynomial:
    amplified iff no eigenvalue on the unit circle, PCD iff no root-of-unity
    eigenvalue, null entropy iff all eigenvalues are roots of unity."""
    cp = char_poly(spec.matrix)
    amplified = unit_circle_root_count(cp) == 0
    pcd = len(cyclotomic_divisors(cp)) == 0
    null = is_cyclotomic_product(cp)
    entropy = EntropyClass.NULL if null else EntropyClass.POSITIVE
    rad = spectral_radius(spec) if with_radius else None
    mrad = matrix_radius(spec) if with_radius else None
    return DynReport(degree=degree(spec), amplified=amplified, pcd=pcd,
                     entropy=entropy, dense_orbit=pcd,
                     spectral_radius=rad, matrix_radius=mrad)


def fix_count(spec: EndoSpec, m: int) -> Optional[int]:
    """#Fix(f^m) = det(M^m - I)^2, or None when the fixed locus is infinite
    (det(M^m - I) = 0)."""
    if spec.has_translation:
        raise TranslationUnsupported(
            "fixed-point counting for f = g + a depends on a choice of "
            "identity; strip the translation first")
    if m < 1:
        raise InputError("m must be a positive integer")
    d = bareiss_det(mat_sub(mat_pow(spec.matrix, m), identity(spec.n)))
    return None if d == 0 else d * d


def torsion_fixed_count(spec: EndoSpec, m: int, big_n: int) -> int:
    """Number of fixed points of f^m inside A[N] = (Z/N)^{2n}, where f acts
    by M on each of the two H^1 coordinates: (prod gcd(d_i, N))^2 for the
    elementary divisors d_i of M^m - I."""
    if spec.has_translation:
        raise TranslationUnsupported("torsion counting requires a = 0")
    if m < 1 or big_n < 1:
        raise InputError("m and N must be positive integers")
    diag = smith_normal_form(mat_sub(mat_pow(spec.matrix, m), identity(spec.n)))
    count = 1
    for d in diag:
        count *= math.gcd(d, big_n) if d != 0 else big_n
    return count * count


def torsion_fixed_count_bruteforce(spec: EndoSpec, m: int, big_n: int) -> int:
    """Brute-force count over (Z/N)^n, squared; usable when N^{2n} <= 10^7."""
    if big_n ** (2 * spec.n) > 10 ** 7:
        raise InputError("brute-force enumeration limited to N^(2n) <= 10^7")
    a = mat_sub(mat_pow(spec.matrix, m), identity(spec.n))
    n = spec.n
    kernel = 0
    for idx in range(big_n ** n):
        x, rest = [], idx
        for _ in range(n):
            rest, digit = divmod(rest, big_n)
            x.append(digit)
        if all(sum(a[i][j] * x[j] for j in range(n)) % big_n == 0
               for i in range(n)):
            kernel += 1
    return kernel * kernel


def is_pcd_via_periods(spec: EndoSpec) -> bool:
    """Independent PCD decision: a root-of-unity eigenvalue of order d forces
    phi(d) <= n, so check det(M^d - I) != 0 for every such d."""
    for d in range(1, 2 * spec.n * spec.n + 2):
        if totient(d) <= spec.n:
            if bareiss_det(mat_sub(mat_pow(spec.matrix, d),
                                   identity(spec.n))) == 0:
                return False
    return True


# -- the Neron-Severi action on symmetric matrices ------------------------------

def _sym_index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def sym_action(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Matrix of S |-> M^T S M on the coordinates {s_ij : i <= j}."""
    m = to_matrix(m)
    n = len(m)
    pairs = _sym_index_pairs(n)
    rows = []
    for (k, l) in pairs:
        row = []
        for (i, j) in pairs:
            if i == j:
                row.append(m[i][k] * m[i][l])
            else:
                row.append(m[i][k] * m[j][l] + m[j][k] * m[i][l])
        rows.append(row)
    return rows


def _vec_to_sym(v: Sequence, n: int) -> list[list[Fraction]]:
    s = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in zip(_sym_index_pairs(n), v):
        s[i][j] = s[j][i] = Fraction(c)
    return s


def _sym_to_vec(s: Sequence[Sequence]) -> list[Fraction]:
    n = len(s)
    return [Fraction(s[i][j]) for (i, j) in _sym_index_pairs(n)]


def _mat_to_int(s) -> list[list[int]]:
    """Scale a rational matrix to a primitive integer matrix (positive scale)."""
    fr = [[Fraction(x) for x in row] for row in s]
    den = math.lcm(*(f.denominator for row in fr for f in row))
    ints = [[int(f * den) for f in row] for row in fr]
    flat = [abs(x) for row in ints for x in row if x]
    g = math.gcd(*flat) if flat else 1
    return [[x // g for x in row] for row in ints] if g > 1 else ints


def is_psd(s: Sequence[Sequence[int]]) -> bool:
    """Exact PSD test for a symmetric integer matrix via the coefficient
    signs of its characteristic polynomial (valid because symmetric matrices
    are real-rooted): all roots >= 0 iff (-1)^(n-k) c_k >= 0 for all k."""
    cp = char_poly(to_matrix(s))
    n = cp.degree
    coeffs = list(cp.coeffs)
    return all(((-1) ** (n - k)) * coeffs[k] >= 0 for k in range(n + 1))


def is_pd(s: Sequence[Sequence]) -> bool:
    """Exact PD test via Sylvester's criterion on leading principal minors."""
    n = len(s)
    scaled = _mat_to_int(s)
    for k in range(1, n + 1):
        minor = [row[:k] for row in scaled[:k]]
        if bareiss_det(minor) <= 0:
            return False
    return True


def _sym_is_zero(s) -> bool:
    return all(x == 0 for row in s for x in row)


def _fixed_form_basis(m) -> list[list[Fraction]]:
    """Rational basis of {S symmetric : M^T S M = S}, in s_ij coordinates."""
    sigma = sym_action(m)
    dim = len(sigma)
    delta = [[Fraction(sigma[i][j]) - (1 if i == j else 0)
              for j in range(dim)] for i in range(dim)]
    return kernel_basis(delta)


def _project_to_span(basis: Sequence[Sequence[Fraction]],
                     target: list[Fraction],
                     weights: Optional[list[int]] = None
                     ) -> Optional[list[Fraction]]:
    """Projection of target onto span(basis) in the inner product with the
    given coordinate weights (default: standard dot product); None when the
    Gram system is singular (it never is for a genuine basis)."""
    if not basis:
        return None
    k = len(basis)
    w = weights or [1] * len(target)
    gram = [[sum(wt * a * b for wt, a, b in zip(w, basis[i], basis[j]))
             for j in range(k)] for i in range(k)]
    rhs = [sum(wt * a * t for wt, a, t in zip(w, basis[i], target))
           for i in range(k)]
    coeffs = solve(gram, rhs)
    if coeffs is None:
        return None
    out = [Fraction(0)] * len(target)
    for c, vec in zip(coeffs, basis):
        for i, x in enumerate(vec):
            out[i] += c * x
    return out


def _verify_fixed_psd(m, s) -> bool:
    """Exact check: S symmetric, nonzero, M^T S M = S, and PSD."""
    if _sym_is_zero(s):
        return False
    mt = transpose(m)
    pulled = mat_mul(mat_mul(mt, s), m)
    if not mat_eq(pulled, s):
        return False
    return is_psd(_mat_to_int(s))


def pcd_nef_witness(spec: EndoSpec) -> Optional[list[list[int]]]:
    """A nonzero integer PSD S with M^T S M = S, existing iff spec is not
    PCD.  Construction: M descends to the quotient by image(Phi_d(M)) with
    finite order dividing d; average a positive form over that orbit and
    pull back."""
    m = spec.matrix
    n = spec.n
    cp = char_poly(m)
    divisors = cyclotomic_divisors(cp)
    if not divisors:
        return None
    d = min(divisors)
    phi_m = _poly_at_matrix(cyclotomic(d), m)
    # quotient map: rows spanning the left annihilator of image(Phi_d(M))
    frac_phi = [[Fraction(x) for x in row] for row in phi_m]
    left_kernel = kernel_basis([[frac_phi[j][i] for j in range(n)]
                                for i in range(n)])
    q = [row[:] for row in left_kernel]
    assert q, "Phi_d(M) must be singular when Phi_d divides char_poly"
    r = len(q)
    # section S = Q^T (Q Q^T)^{-1}, so that Q S = I_r
    qqt = mat_mul(q, transpose(q))
    section = mat_mul(transpose(q), mat_inverse(qqt))
    m_bar = mat_mul(mat_mul(q, [[Fraction(x) for x in row] for row in m]),
                    section)
    # average the standard form over the order-d orbit of M-bar
    s_bar = [[Fraction(0)] * r for _ in range(r)]
    power = [[Fraction(1) if i == j else Fraction(0) for j in range(r)]
             for i in range(r)]
    for _ in range(d):
        contrib = mat_mul(transpose(power), power)
        s_bar = [[s_bar[i][j] + contrib[i][j] for j in range(r)]
                 for i in range(r)]
        power = mat_mul(power, m_bar)
    s = mat_mul(mat_mul(transpose(q), s_bar), q)
    s_int = _mat_to_int(s)
    assert _verify_fixed_psd(m, s_int)
    return s_int


def _poly_at_matrix(p: IntPoly, m) -> list[list[int]]:
    n = len(m)
    out = [[p.coeffs[0] if i == j else 0 for j in range(n)] for i in range(n)] \
        if p.coeffs else [[0] * n for _ in range(n)]
    power = identity(n)
    for c in p.coeffs[1:]:
        power = mat_mul(power, m)
        if c:
            out = [[out[i][j] + c * power[i][j] for j in range(n)]
                   for i in range(n)]
    return out


def _float_cesaro_candidate(m, basis, max_den: int = 10 ** 6
                            ) -> Optional[list[Fraction]]:
    """Floating Cesaro average of (M^T)^j M^j, renormalized each step,
    projected onto the fixed subspace and rationalized."""
    n = len(m)
    acc = [[0.0] * n for _ in range(n)]
    power = [[float(x) for x in row] for row in identity(n)]
    mf = [[float(x) for x in row] for row in m]
    for _ in range(64):
        for i in range(n):
            for j in range(n):
                acc[i][j] += sum(power[k][i] * power[k][j] for k in range(n))
        nxt = [[sum(power[i][k] * mf[k][j] for k in range(n))
                for j in range(n)] for i in range(n)]
        scale = max(abs(x) for row in nxt for x in row) or 1.0
        power = [[x / scale for x in row] for row in nxt]
    scale = max(abs(x) for row in acc for x in row) or 1.0
    vec = [Fraction(x / scale).limit_denominator(max_den)
           for x in _sym_to_vec(acc)]
    proj = _project_to_span(basis, vec)
    if proj is None:
        return None
    return [c.limit_denominator(max_den) for c in proj]


def fixed_nef_witness(spec: EndoSpec) -> Optional[list[list[Fraction]]]:
    """A nonzero rational PSD S with M^T S M = S, or None when the map is
    amplified (in which case the emptiness of ker(sigma - id) on the PSD cone
    is verified independently).  Witness search is sound but incomplete:
    SearchFailed is a verified "not found", never a "does not exist"."""
    m = spec.matrix
    n = spec.n
    cp = char_poly(m)
    amplified = unit_circle_root_count(cp) == 0
    basis = _fixed_form_basis(m)
    if amplified:
        if basis:
            _verify_no_psd_fixed(m, basis)
        return None
    # candidate 1: exact projection of the identity form onto the fixed space
    target = _sym_to_vec(identity(n))
    proj = _project_to_span(basis, target)
    if proj is not None:
        s = _vec_to_sym(proj, n)
        if _verify_fixed_psd(m, s):
            return s
    # candidate 2: floating Cesaro average, rationalized then verified
    cand = _float_cesaro_candidate(m, basis)
    if cand is not None:
        s = _vec_to_sym(cand, n)
        if _verify_fixed_psd(m, s):
            return s
    # candidate 3: the integral PCD witness, when a cyclotomic divisor exists
    if cyclotomic_divisors(cp):
        s_int = pcd_nef_witness(spec)
        if s_int is not None:
            return [[Fraction(x) for x in row] for row in s_int]
    raise SearchFailed(
        "no rational fixed PSD form found (a non-amplified map always has a "
        "real fixed nef class, but it may have no rational representative)")


def _verify_no_psd_fixed(m, basis: Sequence[Sequence[Fraction]]) -> None:
    """Certify ker(sigma - id) inter PSD = {0} by exhibiting a positive
    definite U trace-orthogonal to the fixed subspace: then tr(US) > 0 for
    every nonzero PSD S, so none lies in the fixed subspace."""
    n = len(m)
    # trace pairing in s_ij coordinates: weight 1 on the diagonal, 2 off it
    weights = [1 if i == j else 2 for (i, j) in _sym_index_pairs(n)]
    seeds = [identity(n),
             [[i + j + 1 if i == j else 0 for j in range(n)] for i in range(n)],
             [[n + 1 if i == j else 1 for j in range(n)] for i in range(n)]]
    for seed in seeds:
        vec = _sym_to_vec(seed)
        p = _project_to_span(basis, vec, weights)
        if p is None:
            continue
        res = [t - q for t, q in zip(vec, p)]
        u = _vec_to_sym(res, n)
        if all(sum(wt * a * b for wt, a, b in zip(weights, res, bv)) == 0
               for bv in basis) and is_pd(u):
            return
    raise SearchFailed(
        "amplified verified by the eigenvalue criterion, but no positive "
        "definite separator of the fixed subspace was found")


# -- spectral radii --------------------------------------------------------------

def spectral_radius(spec: EndoSpec) -> AlgebraicRadius:
    """The N^1 spectral radius rho(M)^2, isolated as the largest real root
    of the product-root polynomial (whose roots include every lambda_i
    lambda_j)."""
    cp = char_poly(spec.matrix)
    q = product_root_poly(cp).primitive_signed()
    interval = isolate_largest_real_root(q, RADIUS_WIDTH)
    assert interval is not None, "rho(M)^2 is always a real root"
    lo, hi = interval
    return AlgebraicRadius(q, lo, hi)


def matrix_radius(spec: EndoSpec) -> Optional[AlgebraicRadius]:
    """rho(M) itself, when the characteristic polynomial has a real dominant
    root (|real root| attains the spectral radius); None otherwise.  Decided
    exactly by comparing largest real roots of exact carrier polynomials."""
    cp = char_poly(spec.matrix)
    s = plus_minus_poly(cp).primitive_signed()    # roots: +-lambda_i
    t = even_square_poly(cp).primitive_signed()   # roots: lambda_i^2
    q = product_root_poly(cp).primitive_signed()  # largest real root: rho^2
    if isolate_largest_real_root(t) is None:
        return None
    if not maxroots_equal(t, q):
        return None
    interval = isolate_largest_real_root(s, RADIUS_WIDTH)
    assert interval is not None
    lo, hi = interval
    return AlgebraicRadius(s, lo, hi)
