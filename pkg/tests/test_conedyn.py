"""Polyhedral cones and cone-preserving endomorphisms: descent, limits."""
from fractions import Fraction

import pytest

from exactdyn.common import (HypothesisViolated, NotContractible,
                             NotInvariant, InputError)
from exactdyn.conedyn import (ConeEndo, PolyCone, amplified_test, contains,
                              contract, descend, extremal_rays,
                              fixed_cone_point, minimal_face, power_limit_ray,
                              ray_permutation)

ORTHANT2 = PolyCone(2, ((1, 0), (0, 1)))
ORTHANT3 = PolyCone(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
ICE_CREAM = PolyCone(3, ((1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)))


class TestPolyCone:
    def test_salience_enforced(self):
        with pytest.raises(InputError):
            PolyCone(2, ((1, 0), (-1, 0)))

    def test_contains(self):
        assert contains(ORTHANT2, (3, 5))
        assert contains(ORTHANT2, (Fraction(1, 2), 0))
        assert not contains(ORTHANT2, (-1, 2))

    def test_extremal_rays_drop_redundant(self):
        cone = PolyCone(2, ((1, 0), (1, 1), (0, 1)))
        rays = extremal_rays(cone)
        assert sorted(rays) == [(0, 1), (1, 0)]

    def test_extremal_rays_square_cone(self):
        rays = extremal_rays(ICE_CREAM)
        assert len(rays) == 4

    def test_minimal_face_interior(self):
        f = minimal_face(ORTHANT2, (1, 1))
        assert sorted(extremal_rays(f)) == [(0, 1), (1, 0)]

    def test_minimal_face_boundary(self):
        f = minimal_face(ORTHANT2, (1, 0))
        assert extremal_rays(f) == [(1, 0)]

    def test_minimal_face_rejects_apex(self):
        with pytest.raises(InputError):
            minimal_face(ORTHANT2, (0, 0))


class TestConeEndo:
    def test_invariance_enforced(self):
        with pytest.raises(NotInvariant):
            ConeEndo(((0, -1), (1, 0)), ORTHANT2)  # rotation leaves orthant

    def test_ray_permutation(self):
        endo = ConeEndo(((0, 2), (3, 0)), ORTHANT2)  # swaps the axes
        perm, order = ray_permutation(endo)
        assert order == 2
        assert perm[perm[0]] == 0

    def test_amplified_diagonal(self):
        assert amplified_test(ConeEndo(((2, 0), (0, 3)), ORTHANT2))
        assert not amplified_test(ConeEndo(((1, 0), (0, 2)), ORTHANT2))

    def test_fixed_cone_point(self):
        endo = ConeEndo(((1, 0), (0, 2)), ORTHANT2)
        x = fixed_cone_point(endo)
        assert x is not None and contains(ORTHANT2, x)
        assert x[1] == 0 and x[0] > 0
        assert fixed_cone_point(ConeEndo(((2, 0), (0, 3)), ORTHANT2)) is None


class TestContract:
    def test_quotient_shape(self):
        endo = ConeEndo(((1, 0), (0, 2)), ORTHANT2)
        smaller, q = contract(endo, (1, 0))
        assert smaller.cone.dim == 1
        assert len(q) == 1 and len(q[0]) == 2
        # q annihilates the contracted ray
        assert sum(q[0][j] * (1, 0)[j] for j in range(2)) == 0

    def test_non_extremal_rejected(self):
        endo = ConeEndo(((1, 0), (0, 1)), ORTHANT2)
        with pytest.raises(InputError):
            contract(endo, (1, 1))


class TestDescent:
    def test_orthant_descends_fully(self):
        m = ((1, 0, 0), (0, 2, 0), (0, 0, 3))
        big = (0, 1, 1)  # vanishes on the fixed axis
        endo = ConeEndo(m, ORTHANT3)
        trace = descend(endo, big)
        assert len(trace.steps) >= 1
        assert trace.final_amplified
        # dimension drops by exactly one per step
        dims = [3] + [s.quotient_map and len(s.induced_matrix)
                      for s in trace.steps]
        for before, after in zip(dims, dims[1:]):
            assert after == before - 1
        # the recorded class stays compatible: B_i = B_{i+1} o q_i
        b = list(big)
        for step in trace.steps:
            q = step.quotient_map
            pushed = trace.big_class_path[trace.steps.index(step) + 1]
            recomposed = [sum(pushed[i] * q[i][j] for i in range(len(pushed)))
                          for j in range(len(b))]
            assert [Fraction(v) for v in recomposed] == \
                [Fraction(v) for v in b]
            b = list(pushed)

    def test_identity_violates_hypothesis(self):
        endo = ConeEndo(((1, 0), (0, 1)), ORTHANT2)
        with pytest.raises(HypothesisViolated):
            descend(endo, (1, 1))


class TestPowerLimit:
    def test_converges_to_dominant_ray(self):
        endo = ConeEndo(((3, 1), (1, 3)), ORTHANT2, bijective=False)
        y, r, residual = power_limit_ray(endo, (2, 1))
        assert abs(r - 4) < 1e-6
        assert residual < 1e-6
        assert abs(y[0] - y[1]) < 1e-6  # dominant ray is the diagonal

    def test_perron_non_symmetric(self):
        endo = ConeEndo(((2, 1), (1, 1)), ORTHANT2, bijective=False)
        y, r, residual = power_limit_ray(endo, (1, 1))
        assert abs(r - (3 + 5 ** 0.5) / 2) < 1e-6
        assert residual < 1e-6
