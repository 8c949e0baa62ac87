import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphakit import kernels
from alphakit.errors import DomainError
from alphakit.quadrature import (
    CircleRule,
    DiskRule,
    MobiusMap,
    integrate_circle,
    integrate_disk,
    integrate_disk_mobius,
    mobius_angular_order,
    polar_grid,
)


class TestCircleRule:
    @pytest.mark.parametrize("k", [0, 1, 5, 100, 511])
    def test_exact_for_exponentials(self, k):
        expected = 1.0 if k == 0 else 0.0
        assert abs(integrate_circle(lambda t: np.exp(1j * k * t), CircleRule(512)) - expected) < 1e-13

    def test_aliases_at_n(self):
        assert integrate_circle(lambda t: np.exp(512j * t), CircleRule(512)) == pytest.approx(1.0)

    def test_rejects_zero_nodes(self):
        with pytest.raises(DomainError):
            CircleRule(0)


class TestDiskRule:
    def test_total_mass(self):
        assert integrate_disk(lambda w: np.ones_like(w)) == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize("m", [1, 3, 10, 31])
    def test_radial_monomials(self, m):
        # int |w|^{2m} dA = 1/(m+1)
        assert integrate_disk(lambda w: np.abs(w) ** (2 * m)) == pytest.approx(1 / (m + 1), rel=1e-13)

    @pytest.mark.parametrize("a,b", [(1, 0), (2, 1), (3, 3)])
    def test_monomial_orthogonality(self, a, b):
        val = integrate_disk(lambda w: w**a * np.conj(w) ** b)
        expected = 1 / (a + 1) if a == b else 0.0
        assert abs(val - expected) < 1e-13

    def test_truncated_radius(self):
        assert integrate_disk(lambda w: np.ones_like(w), radius=0.5) == pytest.approx(0.25, rel=1e-14)

    def test_singular_flag_rejected(self):
        with pytest.raises(DomainError):
            integrate_disk(lambda w: np.log(np.abs(w)), singular=True)

    def test_graded_nodes_cluster_at_center(self):
        plain, graded = DiskRule(16), DiskRule(16).graded(2)
        assert graded.radii.min() < plain.radii.min() ** 1.5
        assert integrate_disk(lambda w: np.ones_like(w), graded) == pytest.approx(1.0, rel=1e-14)

    def test_refined_doubles_orders(self):
        r = DiskRule(16, 40).refined()
        assert (r.radial_order, r.angular_order) == (32, 80)

    def test_deterministic(self):
        f = lambda w: np.exp(w) * np.conj(w) ** 2 + np.abs(w) ** 3  # noqa: E731
        assert integrate_disk(f) == integrate_disk(f)


class TestMobius:
    @settings(max_examples=50, deadline=None)
    @given(st.complex_numbers(max_magnitude=0.9), st.complex_numbers(max_magnitude=0.9))
    def test_involution(self, c, w):
        m = MobiusMap(c)
        assert abs(m(m(w)) - w) < 1e-12

    def test_swaps_center_and_origin(self):
        m = MobiusMap(0.4 - 0.3j)
        assert abs(m(0.0) - (0.4 - 0.3j)) < 1e-15
        assert abs(m(0.4 - 0.3j)) < 1e-15

    def test_jacobian_integrates_to_one(self):
        rule = DiskRule(64)
        m = MobiusMap(0.7j)
        val = np.sum(rule.weights * m.jacobian(rule.nodes))
        assert val == pytest.approx(1.0, rel=1e-10)

    def test_angular_order_grows_toward_the_circle(self):
        assert mobius_angular_order(0.5) <= 64
        assert mobius_angular_order(0.95) >= 512
        assert mobius_angular_order(0.0) == 1

    @pytest.mark.parametrize("z", [0.0, 0.3 + 0.1j, -0.6j, 0.85])
    def test_green_of_constant_alpha_zero(self, z):
        # int G_0(z, w) dA(w) = -(1 - |z|^2)
        val = integrate_disk_mobius(lambda w: kernels.green_alpha(z, w, 0.0), z)
        assert val == pytest.approx(-(1 - abs(z) ** 2), rel=1e-8)

    def test_log_singularity_beats_plain_rule(self):
        z = 0.37 + 0.21j
        exact = -(1 - abs(z) ** 2)
        f = lambda w: kernels.green_alpha(z, w, 0.0)  # noqa: E731
        assert abs(integrate_disk_mobius(f, z) - exact) < 1e-3 * abs(integrate_disk(f) - exact)

    def test_refinement_invariant(self):
        # one refinement changes the singular integral by less than 1e-8
        z = 0.5 - 0.2j
        f = lambda w: kernels.green_alpha(z, w, 1.0) * (1 + w)  # noqa: E731
        rule = DiskRule(32)
        assert abs(integrate_disk_mobius(f, z, rule) - integrate_disk_mobius(f, z, rule.refined())) < 1e-8


class TestPolarGrid:
    def test_origin_once(self):
        g = polar_grid(5, 8, 0.9)
        assert np.count_nonzero(g == 0) == 1
        assert g.size == 1 + 4 * 8

    def test_confined(self):
        assert np.abs(polar_grid(7, 9, 0.95)).max() <= 0.95 + 1e-15

    @pytest.mark.parametrize("bad", [1.0, -0.1])
    def test_bad_radius(self, bad):
        with pytest.raises(DomainError):
            polar_grid(3, 3, bad)
