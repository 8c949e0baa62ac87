import numpy as np
import pytest
from scipy.special import beta

from alphakit import analysis, series, solver
from alphakit.errors import DomainError
from alphakit.quadrature import CircleRule, DiskRule, polar_grid
from alphakit.solver import BoundaryData, SourceField

ALPHAS = [0.0, 0.5, 1.0, 2.5]
PTS = np.array([0.0, 0.3, 0.5 + 0.2j, -0.7j, 0.6 - 0.6j, 0.9])


def antianalytic_extension(z, k, alpha):
    # weighted Poisson extension of e^{-ik theta}
    return np.conj(z) ** k * series.p_alpha_k(np.abs(z) ** 2, k, alpha) / beta(k, alpha + 1)


class TestBoundaryData:
    def test_needs_exactly_one_representation(self):
        with pytest.raises(DomainError):
            BoundaryData()
        with pytest.raises(DomainError):
            BoundaryData(fourier={0: 1}, samples=[1, 2])

    def test_fourier_evaluation(self):
        b = BoundaryData.from_fourier({1: 2.0, -2: 1j})
        t = np.linspace(0, 6, 7)
        np.testing.assert_allclose(b(t), 2 * np.exp(1j * t) + 1j * np.exp(-2j * t), atol=1e-15)

    def test_samples_trig_interpolant_recovers_coefficients(self):
        t = 2 * np.pi * np.arange(16) / 16
        b = BoundaryData.from_samples(np.cos(t) + 0.5j * np.sin(3 * t))
        c = b.coefficients()
        assert c[1] == pytest.approx(0.5) and c[-1] == pytest.approx(0.5)
        assert c[3] == pytest.approx(0.25) and c[-3] == pytest.approx(-0.25)

    @pytest.mark.parametrize("order", [1, 3])
    def test_spline_interpolants_hit_the_samples(self, order):
        t = 2 * np.pi * np.arange(12) / 12
        vals = np.exp(np.sin(t))
        b = BoundaryData.from_samples(vals, interp_order=order)
        np.testing.assert_allclose(b(t), vals, rtol=1e-14)
        with pytest.raises(DomainError):
            b.coefficients()

    def test_sup_norm_is_an_upper_bound(self):
        b = BoundaryData.from_fourier({1: 1.0, 7: 1.0})
        t = np.linspace(0, 2 * np.pi, 100_001)
        assert b.sup_norm >= np.abs(b(t)).max()
        assert b.sup_norm <= 2.0 + 0.01

    def test_centered(self):
        b = BoundaryData.from_fourier({0: 0.3, 1: 0.5}).centered()
        assert b.mean() == 0
        assert b.coefficients() == {1: 0.5}


class TestSourceField:
    def test_monomial(self):
        g = SourceField.monomial(2, 1, 0.5j)
        z = 0.3 + 0.4j
        assert g(z) == pytest.approx(0.5j * z**2 * np.conj(z))
        assert g.sup_norm == 0.5

    def test_callable_sup_is_inflated_grid_max(self):
        g = SourceField.from_callable(lambda w: np.exp(np.real(w)))
        assert np.e <= g.sup_norm <= 1.06 * np.e

    def test_negative_exponent(self):
        with pytest.raises(DomainError):
            SourceField.monomial(-1, 0)


class TestPoissonIntegral:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_constant_data(self, alpha):
        np.testing.assert_allclose(solver.poisson_integral(BoundaryData.constant(1.0), PTS, alpha), 1.0, atol=1e-10)

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_analytic_data_extend_analytically(self, alpha, k):
        vals = solver.poisson_integral(BoundaryData.from_fourier({k: 1.0}), PTS, alpha)
        np.testing.assert_allclose(vals, PTS**k, atol=1e-10)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.5])
    @pytest.mark.parametrize("k", [1, 3])
    def test_antianalytic_data(self, alpha, k):
        vals = solver.poisson_integral(BoundaryData.from_fourier({-k: 1.0}), PTS, alpha)
        np.testing.assert_allclose(vals, antianalytic_extension(PTS, k, alpha), rtol=1e-9, atol=1e-12)

    def test_frozen_value(self):
        # alpha = 1, data e^{-i theta}, z = 0.3: 0.3 * P_{1,1}(0.09) / B(1, 2)
        assert solver.poisson_integral(BoundaryData.from_fourier({-1: 1.0}), 0.3, 1.0) == pytest.approx(0.573, rel=1e-12)

    def test_alpha_zero_matches_classical(self):
        b = BoundaryData.from_fourier({-2: 0.4, 1: 0.3j, 3: -0.2})
        np.testing.assert_allclose(
            solver.poisson_integral(b, PTS, 0.0), solver.classical_poisson_integral(b, PTS), atol=1e-12
        )

    def test_explicit_rule_is_honored(self):
        b = BoundaryData.from_fourier({-1: 1.0})
        coarse = solver.poisson_integral(b, 0.9, 1.0, CircleRule(16))
        assert abs(coarse - antianalytic_extension(0.9, 1, 1.0)) > 1e-3

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_derivatives_match_finite_differences(self, alpha):
        b = BoundaryData.from_fourier({-2: 0.4, 1: 0.3j, 3: -0.2, 0: 0.1})
        z = np.array([0.2 - 0.1j, 0.5j, -0.7])
        fz, fzb = solver.poisson_integral_derivatives(b, z, alpha)
        fd_z, fd_zb = analysis.wirtinger_fd(lambda u: solver.poisson_integral(b, u, alpha), z)
        np.testing.assert_allclose(fz, fd_z, atol=1e-8)
        np.testing.assert_allclose(fzb, fd_zb, atol=1e-8)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_residual(self, alpha):
        b = BoundaryData.from_fourier({-2: 0.4, -1: 0.2, 1: 0.3j, 3: -0.2})
        z = polar_grid(4, 6, 0.8)
        res = analysis.delta_alpha_residual(lambda u: solver.poisson_integral(b, u, alpha), z, alpha)
        assert np.max(np.abs(res)) < 1e-4


class TestGreenPotential:
    @pytest.mark.parametrize("z", [0.0, 0.3, 0.5 + 0.2j, -0.7j, 0.9, 0.95])
    def test_sharp_case(self, z):
        val = solver.green_potential(SourceField.constant(-1.0), z, 0.0)
        assert val == pytest.approx(1 - abs(z) ** 2, abs=1e-12)

    @pytest.mark.parametrize("z", [0.0, 0.4j, 0.8 + 0.1j])
    def test_alpha_one_constant(self, z):
        val = solver.green_potential(SourceField.constant(1.0), z, 1.0)
        assert val == pytest.approx(-((1 - abs(z) ** 2) ** 2) / 2, abs=1e-12)

    def test_zero_source_short_circuits(self):
        assert np.all(solver.green_potential(SourceField.zero(), PTS, 1.0) == 0)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
    def test_modulus_bound(self, alpha):
        g = SourceField.monomial(1, 1, 0.8)
        z = polar_grid(4, 5, 0.9)
        vals = np.abs(solver.green_potential(g, z, alpha))
        assert np.all(vals <= solver.green_potential_bound(g, z, alpha) + 1e-12)

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 2.5])
    def test_derivatives_match_finite_differences(self, alpha):
        g = SourceField.monomial(2, 0, 0.5 - 0.2j)
        z = np.array([0.1 + 0.2j, -0.6j])
        fz, fzb = solver.green_potential_derivatives(g, z, alpha)
        fd_z, fd_zb = analysis.wirtinger_fd(lambda u: solver.green_potential(g, u, alpha), z)
        np.testing.assert_allclose(fz, fd_z, atol=1e-7)
        np.testing.assert_allclose(fzb, fd_zb, atol=1e-7)

    def test_recovers_source(self):
        g = SourceField.from_callable(lambda w: np.cos(np.real(w)) + 1j * np.imag(w) ** 2, sup_norm=2.0)
        z = np.array([0.0, 0.5j, -0.4 + 0.3j])
        field = solver.solve(None, g, 1.5)
        np.testing.assert_allclose(analysis.delta_alpha_residual(field, z, 1.5), g(z), atol=1e-5)

    def test_refinement_changes_little(self):
        g = SourceField.monomial(1, 2, 1.0)
        z = 0.55 - 0.3j
        a = solver.green_potential(g, z, 0.7, DiskRule(64))
        b = solver.green_potential(g, z, 0.7, DiskRule(64).refined())
        assert abs(a - b) < 1e-8


class TestSolve:
    def test_superposition(self):
        b = BoundaryData.from_fourier({1: 0.2, -1: 0.3})
        g = SourceField.constant(0.5)
        f = solver.solve(b, g, 1.0)
        z = np.array([0.2, 0.5j])
        np.testing.assert_allclose(
            f(z), solver.poisson_integral(b, z, 1.0) + solver.green_potential(g, z, 1.0), rtol=1e-15
        )

    def test_empty_problem_is_zero(self):
        f = solver.solve(None, None, 0.5)
        assert np.all(f(PTS) == 0)

    def test_jacobian(self):
        f = solver.solve(BoundaryData.from_fourier({1: 1.0}), None, 0.0)
        jac = solver.solution_jacobian(f, 0.3)
        assert jac.fz == pytest.approx(1.0)
        assert abs(jac.fzbar) < 1e-12
        assert jac.op_norm == pytest.approx(1.0)

    def test_boundary_limit_recovers_data(self):
        b = BoundaryData.from_fourier({-1: 0.5, 2: 0.3j})
        f = solver.solve(b, SourceField.constant(1.0), 1.0)
        theta = np.array([0.0, 1.0, 4.0])
        np.testing.assert_allclose(solver.boundary_limit(f, theta), b(theta), atol=1e-5)

    def test_outside_disk(self):
        f = solver.solve(BoundaryData.constant(1.0), None, 0.0)
        with pytest.raises(DomainError):
            f(1.0)

    def test_negative_alpha_accepted(self):
        f = solver.solve(BoundaryData.from_fourier({-1: 1.0}), None, -0.5)
        assert f(0.4) == pytest.approx(antianalytic_extension(0.4, 1, -0.5), rel=1e-9)
