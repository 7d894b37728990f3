"""Polynomial engine: Sturm counting, cyclotomic detection, Salem checks."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactdyn.intpoly import (IntPoly, LEHMER, SalemVerdict, count_real_roots,
                              cyclotomic, cyclotomic_divisors,
                              is_cyclotomic_product, noncyclotomic_part,
                              primitive_gcd, root_location_summary,
                              salem_check, squarefree_part, sturm_count,
                              unit_circle_root_count)


def poly(*coeffs):
    return IntPoly(coeffs)


class TestSturm:
    def test_quadratic_roots(self):
        p = poly(-2, 0, 1)  # x^2 - 2
        assert sturm_count(p, 0, 2) == 1
        assert sturm_count(p, -2, 2) == 2
        assert sturm_count(p, 2, 3) == 0

    def test_endpoint_conventions(self):
        p = poly(-1, 0, 1)  # roots +-1
        assert sturm_count(p, 0, 1) == 1      # root at b counted
        assert sturm_count(p, 1, 2) == 0      # root at a not counted
        assert sturm_count(p, -1, 1) == 1

    def test_non_squarefree_counts_distinct(self):
        p = poly(-1, 1) * poly(-1, 1) * poly(-3, 1)  # (x-1)^2 (x-3)
        assert sturm_count(p, 0, 4) == 2
        assert count_real_roots(p) == 2

    def test_rational_endpoints(self):
        p = poly(-1, -1, 1)  # golden ratio roots
        assert sturm_count(p, Fraction(3, 2), Fraction(17, 10)) == 1


class TestCyclotomic:
    def test_first_nontrivial_coefficient(self):
        # Phi_105 is the first cyclotomic polynomial with a coefficient
        # outside {-1, 0, 1}
        assert -2 in cyclotomic(105).coeffs

    def test_divisor_detection(self):
        p = cyclotomic(4) * poly(-2, 1)
        assert cyclotomic_divisors(p) == frozenset({4})
        assert not is_cyclotomic_product(p)
        assert noncyclotomic_part(p) == poly(-2, 1)

    def test_pure_product(self):
        p = cyclotomic(1) * cyclotomic(6)
        assert is_cyclotomic_product(p)
        assert cyclotomic_divisors(p) == frozenset({1, 6})

    def test_lehmer_has_none(self):
        assert cyclotomic_divisors(LEHMER) == frozenset()


class TestUnitCircle:
    def test_lehmer(self):
        # Salem of degree 10: 8 roots on the circle
        assert unit_circle_root_count(LEHMER) == 8

    def test_cyclotomic_factors(self):
        assert unit_circle_root_count(cyclotomic(5)) == 4
        assert unit_circle_root_count(poly(-1, 1)) == 1
        assert unit_circle_root_count(poly(1, 1)) == 1

    def test_no_circle_roots(self):
        assert unit_circle_root_count(poly(1, -3, 1)) == 0
        assert unit_circle_root_count(poly(-2, 1)) == 0


class TestSalem:
    def test_lehmer_certified(self):
        assert salem_check(LEHMER) == SalemVerdict.SALEM

    def test_cyclotomic_rejected(self):
        assert salem_check(cyclotomic(12)) == SalemVerdict.NOT_SALEM

    def test_low_degree_rejected(self):
        assert salem_check(poly(1, -3, 1)) == SalemVerdict.NOT_SALEM

    def test_reducible_configuration(self):
        # reciprocal, right root distribution, but visibly reducible
        p = LEHMER * cyclotomic(1) * cyclotomic(2)
        assert salem_check(p) == SalemVerdict.NOT_SALEM


class TestSummary:
    def test_lehmer_summary(self):
        s = root_location_summary(LEHMER)
        assert s.degree == 10
        assert s.distinct_unit_circle_roots == 8
        assert s.distinct_real_roots_gt_one == 1
        assert s.cyclotomic_divisors == frozenset()
        assert s.is_reciprocal


class TestGcd:
    def test_common_factor(self):
        a = poly(-1, 1) * poly(1, 1, 1)
        b = poly(-1, 1) * poly(-2, 1)
        assert primitive_gcd(a, b) == poly(-1, 1)

    def test_squarefree_part(self):
        p = poly(-1, 1) * poly(-1, 1) * poly(-2, 1)
        assert squarefree_part(p) == poly(-1, 1) * poly(-2, 1)


small_polys = st.lists(st.integers(-5, 5), min_size=2, max_size=7).filter(
    lambda c: any(x != 0 for x in c[1:]) and any(x != 0 for x in c))


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_gcd_divides_both(ca, cb):
    a, b = IntPoly(ca), IntPoly(cb)
    g = primitive_gcd(a, b)
    if g.degree >= 1:
        from exactdyn.intpoly import _prem_simple
        assert _prem_simple(a, g).is_zero()
        assert _prem_simple(b, g).is_zero()


@settings(max_examples=60, deadline=None)
@given(small_polys)
def test_real_root_count_matches_product(ca):
    p = IntPoly(ca)
    q = p * poly(-2, 1)  # add a known root at 2
    assert count_real_roots(q) in (count_real_roots(p) + 1,
                                   count_real_roots(p))


@settings(max_examples=40, deadline=None)
@given(small_polys)
def test_unit_circle_count_invariant_under_reciprocal(ca):
    p = IntPoly(ca)
    if p.coeffs[0] == 0:
        return
    from exactdyn.intpoly import reciprocal
    assert unit_circle_root_count(p) == unit_circle_root_count(reciprocal(p))
