"""Real algebraic numbers: isolating intervals and quotient-ring arithmetic.

An algebraic number is carried as an integer polynomial plus an isolating
interval (lo, hi] containing exactly one of its real roots.  Sign queries
are answered by interval refinement backed by Sturm counts; nothing is ever
decided from a floating approximation.

NumberField implements arithmetic in Q[x]/(m) for monic m that need not be
irreducible: inverting a zero divisor raises SplitNeeded carrying the
offending factor, and the caller restarts in the factor that still contains
the designated root (dynamic evaluation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .intpoly import (IntPoly, SturmChain, cauchy_bound, primitive_gcd,
                      sturm_count, _frac_div_exact)


@dataclass(frozen=True)
class AlgebraicRadius:
    """A real algebraic number given by a carrier polynomial and an
    isolating interval (lo, hi] holding exactly one of its real roots."""
    min_poly: IntPoly
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        assert sturm_count(self.min_poly, self.lo, self.hi) == 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def refined(self, width: Fraction) -> "AlgebraicRadius":
        lo, hi = refine_interval(self.min_poly, self.lo, self.hi, width)
        return AlgebraicRadius(self.min_poly, lo, hi)

    def contains(self, x) -> bool:
        return self.lo < Fraction(x) <= self.hi


def _nonroot_point(p: IntPoly, x: Fraction, step: Fraction) -> Fraction:
    """A point near x where p does not vanish (deterministic nudging)."""
    while p.sign_at(x) == 0:
        x += step
        step /= 2
    return x


def refine_interval(p: IntPoly, lo: Fraction, hi: Fraction,
                    width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of p below the given width."""
    while hi - lo > width:
        mid = _nonroot_point(p, (lo + hi) / 2, (hi - lo) / 1024)
        if not lo < mid < hi:
            break
        if sturm_count(p, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def isolate_largest_real_root(p: IntPoly,
                              width: Fraction = Fraction(1, 10 ** 6)
                              ) -> tuple[Fraction, Fraction] | None:
    """Isolating interval (lo, hi] for the largest real root of p, refined
    below the requested width; None when p has no real roots."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return None
    bound = cauchy_bound(p) + 1
    lo, hi = -bound, bound
    chain = SturmChain(p)
    if chain.count_open(lo, hi) == 0:
        return None
    # invariant: at least one root in (lo, hi], none above hi
    while hi - lo > width or sturm_count(p, lo, hi) != 1:
        mid = _nonroot_point(p, (lo + hi) / 2, (hi - lo) / 1024)
        if not lo < mid < hi:
            break
        if chain.count_open(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def maxroots_equal(p: IntPoly, q: IntPoly) -> bool:
    """Whether the largest real roots of p and q coincide (both must have
    real roots).  Exact: certified via a shared factor inside overlapping
    isolating intervals, or refuted by interval separation."""
    ip = isolate_largest_real_root(p)
    iq = isolate_largest_real_root(q)
    if ip is None or iq is None:
        raise ValueError("both polynomials need a real root")
    h = primitive_gcd(p, q)
    if h.degree < 1:
        return False
    (plo, phi), (qlo, qhi) = ip, iq
    while True:
        if phi <= qlo or qhi <= plo:
            return False
        klo, khi = max(plo, qlo), min(phi, qhi)
        if klo < khi and sturm_count(h, klo, khi) >= 1:
            return True
        plo, phi = refine_interval(p, plo, phi, (phi - plo) / 4)
        qlo, qhi = refine_interval(q, qlo, qhi, (qhi - qlo) / 4)


# -- quotient-ring arithmetic ---------------------------------------------------

class SplitNeeded(ArithmeticError):
    """A zero divisor was inverted; carry a proper monic factor of the modulus."""

    def __init__(self, factor: IntPoly):
        super().__init__(f"modulus splits off factor {factor}")
        self.factor = factor


def _fpoly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fpoly_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    quo = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    for i in range(len(rem) - len(b), -1, -1):
        q = rem[i + len(b) - 1] / b[-1]
        quo[i] = q
        if q:
            for j, bc in enumerate(b):
                rem[i + j] -= q * bc
    return _fpoly_trim(quo), _fpoly_trim(rem)


class NumberField:
    """Q[x]/(m) with a designated real root of m fixed by an isolating
    interval.  m is monic and may be reducible (see SplitNeeded)."""

    def __init__(self, modulus: IntPoly, lo: Fraction, hi: Fraction):
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        assert sturm_count(modulus, lo, hi) == 1
        self.modulus = modulus
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._mod_coeffs = [Fraction(c) for c in modulus.coeffs]

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __repr__(self) -> str:
        return f"NumberField({self.modulus!r}, ({self.lo}, {self.hi}])"

    # -- element constructors

    def elem(self, coeffs: Sequence) -> "NFElem":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) >= self.degree:
            _, cs = _fpoly_divmod(cs, self._mod_coeffs)
        return NFElem(self, tuple(_fpoly_trim(list(cs))))

    def zero(self) -> "NFElem":
        return NFElem(self, ())

    def one(self) -> "NFElem":
        return self.elem([1])

    def rational(self, r) -> "NFElem":
        return self.elem([Fraction(r)])

    def gen(self) -> "NFElem":
        return self.elem([0, 1])

    # -- root interval management

    def refine(self) -> None:
        self.lo, self.hi = refine_interval(self.modulus, self.lo, self.hi,
                                           (self.hi - self.lo) / 16)

    def split_containing_root(self, factor: IntPoly) -> "NumberField":
        """Replace the modulus by whichever of (factor, modulus/factor)
        still has the designated root."""
        cofactor_q = _frac_div_exact(self.modulus, factor)
        cofactor = cofactor_q  # primitive; monic since both inputs are monic
        assert cofactor.is_monic() and factor.is_monic()
        if sturm_count(factor, self.lo, self.hi) >= 1:
            new_mod = factor
        else:
            new_mod = cofactor
            assert sturm_count(new_mod, self.lo, self.hi) >= 1
        lo, hi = self.lo, self.hi
        while sturm_count(new_mod, lo, hi) != 1:
            lo, hi = refine_interval(self.modulus, lo, hi, (hi - lo) / 4)
        return NumberField(new_mod, lo, hi)

    # -- decision procedures

    def _int_poly(self, e: "NFElem") -> IntPoly:
        den = math.lcm(*(c.denominator for c in e.coeffs)) if e.coeffs else 1
        return IntPoly(int(c * den) for c in e.coeffs)

    def is_zero(self, e: "NFElem") -> bool:
        if not e.coeffs:
            return True
        ip = self._int_poly(e)
        if ip.degree == 0:
            return False
        g = primitive_gcd(ip, self.modulus)
        if g.degree < 1:
            return False
        return sturm_count(g, self.lo, self.hi) >= 1

    def sign(self, e: "NFElem") -> int:
        """Sign of e evaluated at the designated root."""
        if self.is_zero(e):
            return 0
        ip = self._int_poly(e)
        if ip.degree == 0:
            return 1 if ip.coeffs[0] > 0 else -1
        lo, hi = self.lo, self.hi
        while sturm_count(ip, lo, hi) > 0:
            lo, hi = refine_interval(self.modulus, lo, hi, (hi - lo) / 4)
        self.lo, self.hi = lo, hi
        mid = (lo + hi) / 2
        s = ip.sign_at(mid)
        if s == 0:  # mid happened to be the (rational) root of ip; nudge
            s = ip.sign_at(_nonroot_point(ip, mid, (hi - lo) / 1024))
        return s

    def invert(self, e: "NFElem") -> "NFElem":
        """Multiplicative inverse; raises SplitNeeded on a zero divisor."""
        if not e.coeffs:
            raise ZeroDivisionError("inverting zero")
        # extended Euclid over Q[x]
        a = list(self._mod_coeffs)
        b = list(e.coeffs)
        s0, s1 = [], [Fraction(1)]
        while b:
            q, r = _fpoly_divmod(a, b)
            # s_next = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qc in enumerate(q):
                for j, sc in enumerate(s1):
                    prod[i + j] += qc * sc
            s_next = [x - y for x, y in
                      zip(s0 + [Fraction(0)] * max(0, len(prod) - len(s0)),
                          prod + [Fraction(0)] * max(0, len(s0) - len(prod)))]
            a, b = b, r
            s0, s1 = s1, _fpoly_trim(s_next)
        if len(a) != 1:
            g = IntPoly([c for c in self._monic_int(a).coeffs])
            raise SplitNeeded(g)
        inv = [c / a[0] for c in s0]
        return self.elem(inv)

    @staticmethod
    def _monic_int(a: list[Fraction]) -> IntPoly:
        lead = a[-1]
        monic = [c / lead for c in a]
        den = math.lcm(*(c.denominator for c in monic))
        p = IntPoly(int(c * den) for c in monic)
        # gcd factor of a monic polynomial is monic after primitivization
        return p.primitive()

    def to_float(self, e: "NFElem") -> float:
        root = float((self.lo + self.hi) / 2)
        acc = 0.0
        for c in reversed(e.coeffs):
            acc = acc * root + float(c)
        return acc


@dataclass(frozen=True)
class NFElem:
    field: NumberField
    coeffs: tuple[Fraction, ...]

    def __add__(self, other: "NFElem") -> "NFElem":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        for i, c in enumerate(b):
            a[i] += c
        return self.field.elem(a)

    def __neg__(self) -> "NFElem":
        return NFElem(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "NFElem") -> "NFElem":
        return self + (-other)

    def __mul__(self, other: "NFElem") -> "NFElem":
        if not self.coeffs or not other.coeffs:
            return self.field.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self.field.elem(out)

    def __rmul__(self, k) -> "NFElem":
        k = Fraction(k)
        return NFElem(self.field, tuple(k * c for c in self.coeffs))

    def inverse(self) -> "NFElem":
        return self.field.invert(self)

    def is_zero(self) -> bool:
        return self.field.is_zero(self)

    def sign(self) -> int:
        return self.field.sign(self)

    def as_rational(self) -> Fraction | None:
        """The exact rational value when the element is a constant."""
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def __float__(self) -> float:
        return self.field.to_float(self)
