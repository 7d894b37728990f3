"""Exact linear dynamics on salient polyhedral cones.

Cones are finitely generated over the rationals.  Every decision path is
exact (rational LP, exact kernels); floating arithmetic appears only in
power_limit_ray, which reports a certified residual rather than a claim.
The descent loop simulates reduction from quasi-amplified to amplified by
successive one-dimensional cone contractions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .common import (HypothesisViolated, InputError, NoConvergence,
                     NotContractible, NotInvariant)
from .linalg import (frac_det, identity, inverse, kernel_basis, mat_mul,
                     mat_pow, mat_vec, primitive_ray, rref, solve, to_matrix,
                     transpose)
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, lp_feasible, lp_maximize


def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class PolyCone:
    """A salient polyhedral cone given by finitely many generators."""
    dim: int
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("dim must be positive")
        gens = tuple(_frac_vec(g) for g in self.generators)
        if any(len(g) != self.dim for g in gens):
            raise InputError("generator dimension mismatch")
        if any(all(x == 0 for x in g) for g in gens):
            raise InputError("zero generator")
        object.__setattr__(self, "generators", gens)
        if not _is_salient(gens, self.dim):
            raise InputError("cone is not salient (contains a line)")


def _is_salient(gens, dim) -> bool:
    """No nonzero x with x and -x both in the cone: equivalently no
    nontrivial nonnegative relation sum c_i g_i = 0 (normalized sum c = 1)."""
    if not gens:
        return True
    k = len(gens)
    # constraints: sum_i c_i g_i = 0 (each coordinate ==), sum c_i = 1, c >= 0
    a, b = [], []
    for j in range(dim):
        row = [gens[i][j] for i in range(k)]
        a.append(row + ["=="])
        b.append(Fraction(0))
    a.append([Fraction(1)] * k + ["=="])
    b.append(Fraction(1))
    return not _eq_feasible(a, b)


def _eq_feasible(rows, rhs) -> bool:
    """Feasibility of {A_eq x = b, x >= 0} where each row ends with '=='
    (the marker keeps call sites readable); delegates to the simplex."""
    a_eq = [row[:-1] for row in rows]
    return lp_feasible(a_eq, rhs) is not None


def contains(cone: PolyCone, x: Sequence) -> bool:
    """Membership: x = sum c_i g_i with c_i >= 0, by LP feasibility."""
    x = _frac_vec(x)
    if len(x) != cone.dim:
        raise InputError("dimension mismatch")
    if not cone.generators:
        return all(v == 0 for v in x)
    k = len(cone.generators)
    a = [[cone.generators[i][j] for i in range(k)] for j in range(cone.dim)]
    return lp_feasible(a, list(x)) is not None


def extremal_rays(cone: PolyCone) -> list[tuple[int, ...]]:
    """Inclusion-minimal generating rays, as primitive integer vectors
    deduplicated up to positive scaling, in input order."""
    prim = []
    for g in cone.generators:
        p = primitive_ray(g)
        if p not in prim:
            prim.append(p)
    rays = []
    for idx, g in enumerate(prim):
        others = [h for j, h in enumerate(prim) if j != idx]
        if not others:
            rays.append(g)
            continue
        a = [[Fraction(h[j]) for h in others] for j in range(cone.dim)]
        if lp_feasible(a, [Fraction(x) for x in g]) is None:
            rays.append(g)
    return rays


def _max_step(cone: PolyCone, x, direction) -> Optional[Fraction]:
    """max t with x - t*direction in C (None when unbounded); exact LP."""
    k = len(cone.generators)
    a = [[cone.generators[i][j] for i in range(k)] + [Fraction(direction[j])]
         for j in range(cone.dim)]
    status, _, value = lp_maximize(a, list(_frac_vec(x)),
                                   [Fraction(0)] * k + [Fraction(1)])
    if status == UNBOUNDED:
        return None
    if status != OPTIMAL:
        raise InputError("point not in cone")
    return value


def minimal_face(cone: PolyCone, x: Sequence) -> PolyCone:
    """Smallest extremal face of C containing x; x lies in its relative
    interior.  A ray r belongs to the face iff x - t*r stays in C for some
    t > 0 (then x in face implies r in face by extremality)."""
    x = _frac_vec(x)
    if all(v == 0 for v in x):
        raise InputError("x must be nonzero")
    if not contains(cone, x):
        raise InputError("x is not in the cone")
    rays = extremal_rays(cone)
    face_gens = []
    for r in rays:
        t = _max_step(cone, x, r)
        if t is None or t > 0:
            face_gens.append(tuple(Fraction(c) for c in r))
    if not face_gens:
        raise InputError("empty face for nonzero x (cone inconsistency)")
    return PolyCone(cone.dim, tuple(face_gens))


def interior_point_check(cone: PolyCone, x: Sequence) -> bool:
    """Whether x is in the topological interior of C: for every coordinate
    direction +-e_j, some positive step keeps x inside."""
    x = _frac_vec(x)
    if not contains(cone, x):
        return False
    for j in range(cone.dim):
        for sgn in (1, -1):
            e = [Fraction(0)] * cone.dim
            e[j] = Fraction(sgn)
            t = _max_step(cone, x, e)
            if t is not None and t == 0:
                return False
    return True


@dataclass(frozen=True)
class ConeEndo:
    """An invertible rational matrix phi with phi(C) = C.

    When only forward invariance phi(C) subseteq C is certified (the inverse
    images of generators leave the cone), the endo is still usable for
    power iteration but not for ray permutations or descent; the bijective
    flag records which case holds."""
    matrix: tuple[tuple[Fraction, ...], ...]
    cone: PolyCone
    bijective: bool = field(default=True)

    def __post_init__(self):
        m = to_matrix([[Fraction(x) for x in row] for row in self.matrix])
        if len(m) != self.cone.dim or any(len(r) != self.cone.dim for r in m):
            raise InputError("matrix dimension mismatch")
        if frac_det(m) == 0:
            raise InputError("matrix must be invertible")
        object.__setattr__(self, "matrix", m)
        for g in self.cone.generators:
            if not contains(self.cone, mat_vec(m, g)):
                raise NotInvariant("phi(C) is not contained in C")
        if self.bijective:
            minv = inverse(m)
            for g in self.cone.generators:
                if not contains(self.cone, mat_vec(minv, g)):
                    raise NotInvariant(
                        "phi^{-1}(C) leaves C: phi(C) = C fails; construct "
                        "with bijective=False for forward-only invariance")


def ray_permutation(endo: ConeEndo) -> tuple[dict[int, int], int]:
    """The bijection phi induces on extremal rays (as an index permutation)
    and its order k, so phi^k fixes every extremal ray."""
    if not endo.bijective:
        raise InputError("ray permutation requires phi(C) = C")
    rays = extremal_rays(endo.cone)
    perm = {}
    for i, r in enumerate(rays):
        img = primitive_ray(mat_vec(endo.matrix, [Fraction(c) for c in r]))
        perm[i] = rays.index(img)
    if sorted(perm.values()) != list(range(len(rays))):
        raise InputError("phi does not permute the extremal rays")
    # order of the permutation
    k = 1
    current = dict(perm)
    while any(current[i] != i for i in current):
        current = {i: perm[current[i]] for i in current}
        k += 1
    return perm, k


def _fixed_cone_point(endo: ConeEndo) -> Optional[tuple[Fraction, ...]]:
    """A nonzero x in ker(phi - id) inter C, or None when the intersection
    is trivial.  Exact: kernel basis + LP with the normalization that the
    generator coefficients sum to 1."""
    n = endo.cone.dim
    delta = [[endo.matrix[i][j] - (1 if i == j else 0) for j in range(n)]
             for i in range(n)]
    kb = kernel_basis(delta)
    if not kb:
        return None
    gens = endo.cone.generators
    k, d = len(gens), len(kb)
    # x = sum_i c_i g_i = sum_t y_t v_t, c >= 0, sum c = 1; free y split y+ - y-
    rows, rhs = [], []
    for j in range(n):
        row = ([gens[i][j] for i in range(k)]
               + [-kb[t][j] for t in range(d)]
               + [kb[t][j] for t in range(d)])
        rows.append(row)
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * k + [Fraction(0)] * (2 * d))
    rhs.append(Fraction(1))
    sol = _feasible_point(rows, rhs)
    if sol is None:
        return None
    coeffs = sol[:k]
    x = [sum(c * g[j] for c, g in zip(coeffs, gens)) for j in range(n)]
    assert any(v != 0 for v in x)
    return tuple(x)


def _feasible_point(a, b) -> Optional[list[Fraction]]:
    from .lp import solve_lp
    status, point, _ = solve_lp(a, b, [Fraction(0)] * len(a[0]))
    return list(point) if status == OPTIMAL else None


def amplified_test(endo: ConeEndo) -> bool:
    """True iff ker(phi - id) inter C = {0}."""
    return _fixed_cone_point(endo) is None


def fixed_cone_point(endo: ConeEndo) -> Optional[tuple[Fraction, ...]]:
    """Public wrapper for the exact fixed-point search."""
    return _fixed_cone_point(endo)


def _quotient_map(ray: Sequence[Fraction], dim: int) -> list[list[Fraction]]:
    """A (dim-1) x dim rational map with kernel exactly span(ray): drop the
    coordinate of the first nonzero entry after eliminating it."""
    r = _frac_vec(ray)
    pivot = next(i for i, v in enumerate(r) if v != 0)
    rows = []
    for j in range(dim):
        if j == pivot:
            continue
        row = [Fraction(0)] * dim
        row[j] = Fraction(1)
        row[pivot] = -r[j] / r[pivot]
        rows.append(row)
    return rows


def contract(endo: ConeEndo, ray: Sequence) -> tuple[ConeEndo, list[list[Fraction]]]:
    """Contract an extremal phi-fixed ray: quotient by span(R), push the
    cone and the matrix.  Returns (quotient endo, quotient map q)."""
    ray = _frac_vec(ray)
    n = endo.cone.dim
    rays = extremal_rays(endo.cone)
    if primitive_ray(ray) not in rays:
        raise InputError("ray is not extremal in the cone")
    img = mat_vec(endo.matrix, ray)
    if primitive_ray(img) != primitive_ray(ray):
        raise NotInvariant("phi does not fix the ray")
    q = _quotient_map(ray, n)
    # section s with q s = id: solve per column
    section_cols = []
    for t in range(n - 1):
        rhs = [Fraction(1) if i == t else Fraction(0) for i in range(n - 1)]
        col = solve(q, rhs)
        assert col is not None
        section_cols.append(col)
    section = [[section_cols[t][i] for t in range(n - 1)] for i in range(n)]
    m_bar = mat_mul(mat_mul(q, endo.matrix), section)
    new_gens = []
    for g in endo.cone.generators:
        qg = mat_vec(q, g)
        if any(v != 0 for v in qg):
            new_gens.append(tuple(qg))
    try:
        new_cone = PolyCone(n - 1, tuple(new_gens))
    except InputError as exc:
        raise NotContractible(f"quotient cone contains a line: {exc}") from exc
    return ConeEndo(tuple(tuple(r) for r in m_bar), new_cone,
                    bijective=endo.bijective), q


@dataclass(frozen=True)
class DescentStep:
    ray: tuple[int, ...]
    quotient_map: tuple[tuple[Fraction, ...], ...]
    induced_matrix: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class DescentTrace:
    steps: tuple[DescentStep, ...]
    big_class_path: tuple[tuple[Fraction, ...], ...]
    final_amplified: bool
    final_endo: ConeEndo


def descend(endo: ConeEndo, big: Sequence) -> DescentTrace:
    """The descent loop: while a nonzero fixed cone point x exists, certify
    B(x) = 0 (quasi-amplified guard), pass to the power of phi fixing every
    extremal ray, contract the lexicographically smallest fixed extremal ray
    in the minimal face of x, push B to the quotient, and repeat.  Ends when
    the induced endo is amplified; at most dim steps."""
    if not endo.bijective:
        raise InputError("descent requires phi(C) = C")
    big = _frac_vec(big)
    if len(big) != endo.cone.dim:
        raise InputError("big-class dimension mismatch")
    if not any(sum(b * g for b, g in zip(big, gen)) > 0
               for gen in endo.cone.generators):
        raise InputError("B must be positive somewhere on C")
    steps: list[DescentStep] = []
    path = [big]
    current = endo
    while True:
        x = _fixed_cone_point(current)
        if x is None:
            return DescentTrace(tuple(steps), tuple(path), True, current)
        pairing = sum(b * v for b, v in zip(path[-1], x))
        if pairing != 0:
            raise HypothesisViolated(
                f"fixed cone class with B(x) = {pairing} != 0: the "
                "quasi-amplified hypothesis fails")
        _, order = ray_permutation(current)
        power = mat_pow(current.matrix, order)
        current = ConeEndo(power, current.cone, bijective=True)
        face = minimal_face(current.cone, x)
        candidates = []
        for r in extremal_rays(face):
            img = primitive_ray(mat_vec(current.matrix,
                                        [Fraction(c) for c in r]))
            if img == r:
                candidates.append(r)
        if not candidates:
            raise NotContractible(
                "no phi-fixed extremal ray in the minimal face of the fixed "
                "class even after passing to a ray-fixing power")
        ray = min(candidates)
        b_ray = sum(b * c for b, c in zip(path[-1], ray))
        if b_ray != 0:
            raise HypothesisViolated(
                "fixed extremal ray in the face of a B-trivial class has "
                f"B(R) = {b_ray} != 0")
        current, q = contract(current, ray)
        # push B: B = B_bar o q, i.e. solve q^T b_bar = b (consistent since
        # B vanishes on ker q = span(R))
        b_bar = solve(transpose(q), list(path[-1]))
        assert b_bar is not None
        steps.append(DescentStep(tuple(ray),
                                 tuple(tuple(r) for r in q),
                                 current.matrix))
        path.append(tuple(b_bar))
        if len(steps) > endo.cone.dim:
            raise NotContractible("descent failed to terminate")


def power_limit_ray(endo: ConeEndo, x: Sequence,
                    tol: float = 1e-9, max_iter: int = 200
                    ) -> tuple[list[float], float, float]:
    """Floating power iteration toward the dominant eigenray: returns
    (limit candidate, r = |phi(y)|_1, residual |phi(y) - r y|_inf) with the
    certificate residual < 1e-6 asserted; exact checks only at the gate
    (x must be interior)."""
    x = _frac_vec(x)
    if not interior_point_check(endo.cone, x):
        raise InputError("x must lie in the interior of the cone")
    mf = [[float(v) for v in row] for row in endo.matrix]
    y = [float(v) for v in x]
    norm = sum(abs(v) for v in y)
    y = [v / norm for v in y]
    for _ in range(max_iter):
        z = [sum(mf[i][j] * y[j] for j in range(len(y)))
             for i in range(len(y))]
        norm = sum(abs(v) for v in z)
        z = [v / norm for v in z]
        if max(abs(a - b) for a, b in zip(z, y)) < tol:
            y = z
            break
        y = z
    else:
        raise NoConvergence(
            f"power iteration did not converge in {max_iter} steps")
    fy = [sum(mf[i][j] * y[j] for j in range(len(y))) for i in range(len(y))]
    r = sum(abs(v) for v in fy)
    residual = max(abs(a - r * b) for a, b in zip(fy, y))
    if residual >= 1e-6:
        raise NoConvergence(f"residual {residual} exceeds certificate bound")
    return y, r, residual
