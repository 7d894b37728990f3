"""Integer isometries of hyperbolic lattices of signature (1, rho-1).

The model of N^1 of a projective Hyperkahler manifold: an integer Gram
matrix Q with exactly one positive eigenvalue, and integer matrices g with
g^T Q g = Q.  The closed positive cone {q >= 0, q(., h) >= 0} (component
fixed by a stored reference vector h) serves as the computable superset of
the nef cone; all certificates are exact.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algnum import (AlgebraicRadius, NumberField, SplitNeeded,
                     isolate_largest_real_root, refine_interval)
from .common import (BadSignature, EntropyClass, FieldTooLarge, InputError,
                     NoneInPositiveCone, NotIsometry)
from .intpoly import (IntPoly, SalemVerdict, count_real_roots,
                      cyclotomic_divisors, is_cyclotomic_product, salem_check,
                      squarefree_part, sturm_count)
from .linalg import (bareiss_det, char_poly, identity, integer_kernel,
                     mat_eq, mat_mul, mat_pow, mat_sub, plus_minus_poly,
                     to_matrix, transpose)

FIELD_DEGREE_BOUND = 16
RADIUS_WIDTH = Fraction(1, 10 ** 6)


def _signature_ok(gram) -> bool:
    """Exactly one positive eigenvalue counted with multiplicity and none
    zero.  The characteristic polynomial of a symmetric matrix has all roots
    real, so Descartes' rule (ignoring zero coefficients) counts positive
    roots with multiplicity exactly."""
    cp = char_poly(gram)
    if cp.coeffs[0] == 0:  # eigenvalue 0 <=> det = 0
        return False
    signs = [1 if c > 0 else -1 for c in cp.coeffs if c != 0]
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return changes == 1


@dataclass(frozen=True)
class QuadLattice:
    """An integer lattice of signature (1, rho-1) with a stored reference
    vector h (q(h) > 0) fixing the positive-cone component."""
    gram: tuple[tuple[int, ...], ...]
    rank: int

    def __post_init__(self):
        g = to_matrix(self.gram)
        if len(g) != self.rank or any(len(r) != self.rank for r in g):
            raise InputError(f"gram must be {self.rank}x{self.rank}")
        if g != transpose(g):
            raise InputError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)
        if not _signature_ok(g):
            raise BadSignature(
                "gram matrix must have signature (1, rank-1)")
        object.__setattr__(self, "_h", _reference_vector(g))

    @property
    def h(self) -> tuple[int, ...]:
        return self._h

    def q(self, v: Sequence, w: Optional[Sequence] = None):
        w = v if w is None else w
        return sum(vi * sum(self.gram[i][j] * w[j]
                            for j in range(self.rank))
                   for i, vi in enumerate(v))


def _reference_vector(gram) -> tuple[int, ...]:
    """Deterministic h with q(h) > 0: e_1 if positive, else the small
    integer vector (entries in [-3, 3]) maximizing q, ties broken lex."""
    n = len(gram)
    e1 = tuple(1 if i == 0 else 0 for i in range(n))
    def q(v):
        return sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))
    if q(e1) > 0:
        return e1
    best, best_q = None, 0
    for v in itertools.product(range(-3, 4), repeat=n):
        val = q(v)
        if val > best_q or (val == best_q and best is not None and v < best):
            if val > 0:
                best, best_q = v, val
    if best is None:
        raise BadSignature("no small vector of positive square found")
    return best


@dataclass(frozen=True)
class LatticeIsometry:
    matrix: tuple[tuple[int, ...], ...]
    lattice: QuadLattice

    def __post_init__(self):
        m = to_matrix(self.matrix)
        n = self.lattice.rank
        if len(m) != n or any(len(r) != n for r in m):
            raise InputError("isometry dimension mismatch")
        object.__setattr__(self, "matrix", m)
        q = self.lattice.gram
        if mat_mul(mat_mul(transpose(m), q), m) != q:
            raise NotIsometry("g^T Q g != Q")
        assert bareiss_det(m) in (1, -1)


def verify_isometry(lattice: QuadLattice, g) -> LatticeIsometry:
    """Certify g as an isometry of the lattice (signature already certified
    at lattice construction)."""
    return LatticeIsometry(tuple(tuple(int(x) for x in row) for row in g),
                           lattice)


@dataclass(frozen=True)
class EntropyReport:
    entropy: EntropyClass
    spectral_radius: AlgebraicRadius
    salem_verdict: Optional[SalemVerdict] = None
    noncyclotomic_part: Optional[IntPoly] = None


def _negate_roots(p: IntPoly) -> IntPoly:
    return IntPoly([c if i % 2 == 0 else -c
                    for i, c in enumerate(p.coeffs)]).primitive_signed()


def _leading_carrier(core: IntPoly) -> tuple[IntPoly, bool]:
    """(monic polynomial whose largest real root is the spectral radius,
    whether the leading eigenvalue itself is positive).  Reflection products
    can have leading eigenvalue -a < -1; the sign is decided exactly by a
    Sturm count of core on the isolating interval of the radius."""
    pm = plus_minus_poly(core).primitive_signed()
    interval = isolate_largest_real_root(pm)
    assert interval is not None, ("a non-cyclotomic isometry of signature "
                                  "(1, rho-1) has a real eigenvalue of "
                                  "modulus > 1")
    lo, hi = interval
    positive = sturm_count(core, lo, hi) >= 1
    work = core if positive else _negate_roots(core)
    assert work.is_monic()
    return work, positive


def entropy_class(iso: LatticeIsometry) -> EntropyReport:
    """Null iff char_poly(g) is a product of cyclotomics; when Positive, the
    spectral radius is Sturm-isolated and the Salem check runs on the
    non-cyclotomic part."""
    cp = char_poly(iso.matrix)
    if is_cyclotomic_product(cp):
        one = IntPoly([-1, 1])
        return EntropyReport(EntropyClass.NULL,
                             AlgebraicRadius(one, Fraction(0), Fraction(1)))
    from .intpoly import noncyclotomic_part
    core = noncyclotomic_part(cp)
    carrier, _ = _leading_carrier(core)
    interval = isolate_largest_real_root(carrier, RADIUS_WIDTH)
    assert interval is not None
    lo, hi = interval
    verdict = salem_check(core)
    return EntropyReport(EntropyClass.POSITIVE,
                         AlgebraicRadius(carrier, lo, hi),
                         salem_verdict=verdict, noncyclotomic_part=core)


def null_fixed_witness(iso: LatticeIsometry) -> tuple[int, tuple[int, ...], int]:
    """For a null-entropy isometry: the smallest k (bounded by the lcm of the
    cyclotomic orders present) with a nonzero fixed vector of g^k in the
    closed positive cone; returns (k, v, q(v))."""
    cp = char_poly(iso.matrix)
    if not is_cyclotomic_product(cp):
        raise InputError("null_fixed_witness requires null entropy")
    orders = cyclotomic_divisors(cp)
    bound = math.lcm(*orders) if orders else 1
    lat = iso.lattice
    n = lat.rank
    for k in range(1, bound + 1):
        if bound % k != 0:
            continue
        delta = mat_sub(mat_pow(iso.matrix, k), identity(n))
        if bareiss_det(delta) != 0:
            continue
        basis = integer_kernel(delta)
        v = _positive_cone_vector(lat, basis)
        if v is not None:
            return k, v, lat.q(v)
    raise NoneInPositiveCone(
        "no fixed vector of any relevant power meets the closed positive "
        "cone; the geometric statement guarantees a nef class, which the "
        "positive-cone proxy cannot always see")


def _positive_cone_vector(lat: QuadLattice, basis) -> Optional[tuple[int, ...]]:
    """A nonzero integer combination of the basis (coefficients in [-3, 3])
    in the closed positive cone: q(v) >= 0 and q(v, h) >= 0 after orienting.
    Prefers q(v) > 0, then lexicographically smallest primitive v."""
    from .linalg import primitive_ray
    candidates = []
    n = lat.rank
    for coeffs in itertools.product(range(-3, 4), repeat=len(basis)):
        if all(c == 0 for c in coeffs):
            continue
        v = tuple(sum(c * b[i] for c, b in zip(coeffs, basis))
                  for i in range(n))
        if all(x == 0 for x in v):
            continue
        qv = lat.q(v)
        if qv < 0:
            continue
        v = primitive_ray(v)
        pair = lat.q(v, lat.h)
        if pair < 0:
            v = tuple(-x for x in v)
            pair = -pair
        candidates.append((0 if qv > 0 else 1, v, qv))
    if not candidates:
        return None
    candidates.sort()
    return candidates[0][1]


@dataclass(frozen=True)
class PositiveEntropyCertificate:
    """Exact certificate for Positive entropy: isotropic eigenrays D1 (of
    the leading eigenvalue a > 1) and D2 (of 1/a), given by coordinates in
    Q[x]/(m) with the embedding sending x to a, plus exact pairings."""
    min_poly: IntPoly
    a_interval: tuple[Fraction, Fraction]
    a_coeffs: tuple[Fraction, ...]
    d1: tuple[tuple[Fraction, ...], ...]
    d2: tuple[tuple[Fraction, ...], ...]
    q_d1_d2: tuple[Fraction, ...]
    q_d1_plus_d2: tuple[Fraction, ...]
    d1_float: tuple[float, ...]
    d2_float: tuple[float, ...]


def _nf_eigenvector(field: NumberField, g, lam):
    """A nonzero kernel vector of (g - lam*I) over the field."""
    n = len(g)
    rows = [[field.rational(g[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        rows[i][i] = rows[i][i] - lam
    return _nf_kernel_once(field, rows)


def _nf_kernel_once(field: NumberField, rows):
    n = len(rows)
    cols = len(rows[0])
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, n):
            if not m[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()  # may raise SplitNeeded
        m[r] = [inv * x for x in m[r]]
        for i in range(n):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    assert free, "eigenvalue must produce a kernel"
    fc = free[0]
    v = [field.zero()] * cols
    v[fc] = field.one()
    for rr, pc in enumerate(pivots):
        v[pc] = -m[rr][fc]
    return v


def _nf_normalize(field: NumberField, v):
    """Canonical representative of the ray through v: divide by the first
    coordinate that is nonzero at the designated root, then scale by the
    least positive integer making every coefficient integral in the power
    basis of the field."""
    pivot = next(e for e in v if not e.is_zero())
    inv = pivot.inverse()  # may raise SplitNeeded
    scaled = [inv * e for e in v]
    dens = [c.denominator for e in scaled for c in e.coeffs]
    t = math.lcm(*dens) if dens else 1
    return [Fraction(t) * e for e in scaled]


def _square_split(n: int) -> tuple[int, int]:
    """n = t^2 * d with d squarefree (n > 0), by trial division."""
    t, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            t *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1
    d *= rest
    return t, d


def _canonical_field(core: IntPoly) -> tuple[NumberField, "object"]:
    """Present Q[x]/(core) with a designated real embedding sending a field
    element `a` to the largest real root of core.  Quadratic fields are
    presented canonically as Q(sqrt(d)) with d squarefree; higher degrees
    use core itself as the modulus."""
    if core.degree == 2:
        p, q0 = core.coeffs[1], core.coeffs[0]
        disc = p * p - 4 * q0
        assert disc > 0, "hyperbolic eigenvalue pair must be real"
        t, d = _square_split(disc)
        modulus = IntPoly([-d, 0, 1])
        interval = isolate_largest_real_root(modulus)
        assert interval is not None
        field = NumberField(modulus, *interval)
        # a = (-p + t*sqrt(d)) / 2
        a = field.elem([Fraction(-p, 2), Fraction(t, 2)])
        return field, a
    interval = isolate_largest_real_root(core)
    assert interval is not None
    field = NumberField(core, *interval)
    return field, field.gen()


def positive_entropy_witness(iso: LatticeIsometry) -> PositiveEntropyCertificate:
    """Exact quasi-amplified certificate: isotropic eigenrays D1, D2 for the
    eigenvalues a > 1 and 1/a, oriented positively against h, with the
    pairings q(D1) = q(D2) = 0, q(D1, D2) > 0, q(D1 + D2) > 0 certified in
    the field."""
    cp = char_poly(iso.matrix)
    if is_cyclotomic_product(cp):
        raise InputError("positive_entropy_witness requires positive entropy")
    from .intpoly import noncyclotomic_part
    core = noncyclotomic_part(cp).primitive_signed()
    if core.degree > FIELD_DEGREE_BOUND:
        raise FieldTooLarge(
            f"minimal polynomial degree {core.degree} exceeds the bound "
            f"{FIELD_DEGREE_BOUND}")
    if not core.is_monic():
        raise InputError("characteristic factor is not monic")
    carrier, positive = _leading_carrier(core)
    field, r = _canonical_field(carrier)
    a = r if positive else -r
    g = iso.matrix
    lat = iso.lattice
    n = lat.rank
    while True:
        try:
            return _witness_in_field(field, a, g, lat, n)
        except SplitNeeded as exc:
            new_field = field.split_containing_root(exc.factor)
            a = new_field.elem(a.coeffs)
            field = new_field


def _witness_in_field(field: NumberField, a, g, lat: QuadLattice,
                      n: int) -> PositiveEntropyCertificate:
    d1 = _nf_normalize(field, _nf_eigenvector(field, g, a))
    d2 = _nf_normalize(field, _nf_eigenvector(field, g, a.inverse()))

    def q_field(u, w):
        acc = field.zero()
        for i in range(n):
            for j in range(n):
                if lat.gram[i][j]:
                    acc = acc + Fraction(lat.gram[i][j]) * (u[i] * w[j])
        return acc

    href = [field.rational(x) for x in lat.h]
    for idx, d in enumerate((d1, d2)):
        s = q_field(d, href).sign()
        assert s != 0, "eigenray orthogonal to the reference vector"
        if s < 0:
            vec = [-e for e in d]
            if idx == 0:
                d1 = vec
            else:
                d2 = vec
    # exact certificates
    assert q_field(d1, d1).is_zero(), "D1 must be isotropic"
    assert q_field(d2, d2).is_zero(), "D2 must be isotropic"
    pairing = q_field(d1, d2)
    assert pairing.sign() > 0, "q(D1, D2) > 0 fails"
    s = [x + y for x, y in zip(d1, d2)]
    total = q_field(s, s)
    assert total.sign() > 0, "q(D1 + D2) > 0 fails"
    return PositiveEntropyCertificate(
        min_poly=field.modulus,
        a_interval=(field.lo, field.hi),
        a_coeffs=a.coeffs,
        d1=tuple(e.coeffs for e in d1),
        d2=tuple(e.coeffs for e in d2),
        q_d1_d2=pairing.coeffs,
        q_d1_plus_d2=total.coeffs,
        d1_float=tuple(float(e) for e in d1),
        d2_float=tuple(float(e) for e in d2))


def finite_order_test(iso: LatticeIsometry) -> Optional[int]:
    """Exact multiplicative order of g when finite (char poly a cyclotomic
    product and g semisimple), else None."""
    cp = char_poly(iso.matrix)
    if not is_cyclotomic_product(cp):
        return None
    sf = squarefree_part(cp)
    from .abelian import _poly_at_matrix
    if any(x != 0 for row in _poly_at_matrix(sf, iso.matrix) for x in row):
        return None  # not semisimple: infinite order unipotent part
    orders = cyclotomic_divisors(cp)
    k = math.lcm(*orders) if orders else 1
    assert mat_eq(mat_pow(iso.matrix, k), identity(iso.lattice.rank))
    # k is the lcm of the orders of the eigenvalues, hence exact
    return k
