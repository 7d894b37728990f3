"""Abelian-factor endomorphisms: classification, fixed points, witnesses."""
from fractions import Fraction

import pytest

from exactdyn.abelian import (EndoSpec, classify, degree, fix_count,
                              fixed_nef_witness, is_pcd_via_periods, is_psd,
                              matrix_radius, pcd_nef_witness, sym_action,
                              torsion_fixed_count,
                              torsion_fixed_count_bruteforce)
from exactdyn.common import (EntropyClass, InputError, SearchFailed,
                             TranslationUnsupported)
from exactdyn.intpoly import LEHMER
from exactdyn.linalg import mat_mul, mat_sub, identity, transpose, bareiss_det


def norm(m):
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def companion(p):
    n = p.degree
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -p.coeffs[i]
    return tuple(tuple(r) for r in m)


DOUBLING = EndoSpec(1, ((2,),))
SHIFT_LIKE = EndoSpec(2, ((0, -1), (1, 0)))       # order 4, Null
ANOSOV = EndoSpec(2, ((2, 1), (1, 1)))            # det 1, positive entropy
LEHMER_SPEC = EndoSpec(10, companion(LEHMER))


class TestClassify:
    def test_doubling(self):
        r = classify(DOUBLING)
        assert r.amplified and r.pcd
        assert r.degree == 4
        assert r.entropy is EntropyClass.POSITIVE
        assert r.dense_orbit

    def test_finite_order_is_null(self):
        r = classify(SHIFT_LIKE)
        assert not r.amplified and not r.pcd
        assert r.degree == 1
        assert r.entropy is EntropyClass.NULL
        assert not r.dense_orbit

    def test_anosov_amplified_despite_det_one(self):
        # eigenvalues (3 +- sqrt5)/2 avoid the unit circle entirely
        r = classify(ANOSOV)
        assert r.pcd and r.amplified
        assert r.degree == 1
        assert r.entropy is EntropyClass.POSITIVE

    def test_lehmer(self):
        r = classify(LEHMER_SPEC)
        assert r.pcd and not r.amplified
        assert r.degree == 1
        assert r.entropy is EntropyClass.POSITIVE

    def test_singular_rejected(self):
        with pytest.raises(InputError):
            EndoSpec(2, ((1, 0), (0, 0)))

    def test_periods_shortcut_agrees(self):
        for spec in (DOUBLING, SHIFT_LIKE, ANOSOV, LEHMER_SPEC):
            assert is_pcd_via_periods(spec) == classify(spec).pcd


class TestFixCount:
    def test_doubling_torsion(self):
        # [2] on E: fixed points of [2]^m are (2^m - 1)^2 points
        assert fix_count(DOUBLING, 1) == 1
        assert fix_count(DOUBLING, 2) == 9

    def test_order_four_infinite(self):
        assert fix_count(SHIFT_LIKE, 4) is None  # M^4 = I

    def test_translation_unsupported(self):
        spec = EndoSpec(1, ((2,),), has_translation=True)
        with pytest.raises(TranslationUnsupported):
            fix_count(spec, 1)

    def test_matches_brute_force(self):
        for spec in (DOUBLING, ANOSOV):
            m = spec.matrix
            d = abs(bareiss_det(mat_sub(m, identity(spec.n))))
            assert fix_count(spec, 1) == torsion_fixed_count_bruteforce(
                spec, 1, d)


class TestTorsion:
    def test_snf_vs_brute_force(self):
        for spec in (DOUBLING, ANOSOV, SHIFT_LIKE):
            for big_n in (2, 3, 4, 5, 6):
                for m in (1, 2, 3):
                    exact = torsion_fixed_count(spec, m, big_n)
                    brute = torsion_fixed_count_bruteforce(spec, m, big_n)
                    assert exact == brute, (spec.matrix, m, big_n)


class TestWitnesses:
    def test_non_pcd_has_witness(self):
        s = pcd_nef_witness(SHIFT_LIKE)
        assert s is not None
        # S is integer, PSD, nonzero, and M^T S M == S
        assert is_psd(s)
        assert any(any(x for x in row) for row in s)
        m = SHIFT_LIKE.matrix
        assert norm(mat_mul(mat_mul(transpose(m), s), m)) == norm(s)

    def test_pcd_has_none(self):
        assert pcd_nef_witness(ANOSOV) is None
        assert pcd_nef_witness(LEHMER_SPEC) is None

    def test_fixed_nef_witness_finite_order(self):
        s = fixed_nef_witness(SHIFT_LIKE)
        assert is_psd(s)
        m = SHIFT_LIKE.matrix
        assert norm(mat_mul(mat_mul(transpose(m), s), m)) == norm(s)

    def test_lehmer_search_fails_honestly(self):
        # No rational fixed PSD form exists (D1 in the decisions ledger)
        with pytest.raises(SearchFailed):
            fixed_nef_witness(LEHMER_SPEC)


class TestSymAction:
    def test_consistency_with_congruence(self):
        # sym_action(M) acting on vec(S) must agree with M^T S M
        m = ANOSOV.matrix
        a = sym_action(m)
        s = ((3, 1), (1, 2))
        from exactdyn.abelian import _sym_to_vec, _vec_to_sym
        v = _sym_to_vec(s)
        got = _vec_to_sym(tuple(sum(a[i][j] * v[j] for j in range(len(v)))
                                for i in range(len(v))), 2)
        assert norm(got) == norm(mat_mul(mat_mul(transpose(m), s), m))


class TestRadius:
    def test_doubling_radius(self):
        r = matrix_radius(DOUBLING)
        assert r.lo <= 2 <= r.hi

    def test_lehmer_radius(self):
        r = matrix_radius(LEHMER_SPEC)
        assert float(r.hi - r.lo) <= 1e-5
        # isolated within (1.17628 +- 1e-5)
        assert Fraction(117628, 100000) - Fraction(1, 100000) < r.lo
        assert r.hi < Fraction(117628, 100000) + Fraction(1, 100000)

    def test_anosov_radius(self):
        # dominant root of x^2-3x+1 is (3+sqrt5)/2 ~ 2.618
        r = matrix_radius(ANOSOV)
        assert 2.61 < float(r.lo) and float(r.hi) < 2.62

    def test_negative_dominant(self):
        r = matrix_radius(EndoSpec(2, ((-3, 0), (0, 1))))
        assert r.lo <= 3 <= r.hi
