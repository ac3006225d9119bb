"""Tests for the cross sections of h0, H, h and the Breit-Wigner line."""

import numpy as np
import pytest

from susyscatter.core.params import KGrid, ModelParams
from susyscatter.errors import NoInteriorPeakError, SingularLimitError
from susyscatter.smatrix.analytic import cross_section, s_R
from susyscatter.smatrix.cross_sections import (
    cross_sections,
    sigma0_at_zero,
    sigma_breit_wigner,
    sigma_R_at_zero,
    sigma_R_maximum,
    sigma_R_slope_at_zero,
    sigma_root,
    sigma_root_bracket_form,
    singular_limit_diagnostics,
)
from tests.fixtures.reference_values import (
    A1,
    B,
    BW_PEAK_ENERGY,
    BW_PEAK_HEIGHT,
    D,
    SIGMA0_AT_ZERO,
    SIGMA_R_AT_ZERO,
    SIGMA_R_PEAK_HEIGHT,
    SIGMA_R_PEAK_K,
)


@pytest.fixture
def toy_params() -> ModelParams:
    """Provide the a1 = 3, b = 0.5, d = -0.1 parameter set."""
    return ModelParams(a1=A1, b=B, d=D)


@pytest.fixture
def figure_grid() -> KGrid:
    """Provide the 2000-point grid on [1e-3, 3]."""
    return KGrid(1e-3, 3.0, 2000)


class TestCrossSections:
    """Test the seven cross sections on the figure grid."""

    def test_columns(self, toy_params, figure_grid):
        """Table columns come in a fixed order with E = k^2."""
        columns = cross_sections(figure_grid, toy_params).columns()
        assert list(columns) == ["k", "E", "sigma0", "sigma_e", "sigma_r", "sigma_t", "sigma_h", "sigmaR", "sigmaBW"]
        assert np.allclose(columns["E"], columns["k"] ** 2)

    def test_total_is_elastic_plus_reaction(self, toy_params, figure_grid):
        """sigma_t = sigma_e + sigma_r and sigma_r = (pi/k^2)(1 - |S_H|^2) > 0."""
        xs = cross_sections(figure_grid, toy_params)
        assert np.allclose(xs.sigma_t, xs.sigma_e + xs.sigma_r)
        assert np.all(xs.sigma_r > 0)

    def test_all_non_negative(self, toy_params, figure_grid):
        """Every cross section is non-negative for b > 0."""
        xs = cross_sections(figure_grid, toy_params)
        for values in xs.columns().values():
            assert np.all(values >= 0)

    def test_root_closed_form_matches_matrix(self, toy_params, figure_grid):
        """sigma_R = (pi/k^2)|S_R - 1|^2."""
        ks = figure_grid.nodes
        assert np.allclose(sigma_root(ks, toy_params), cross_section(s_R(ks, toy_params), ks), rtol=1e-10)

    def test_bracket_form_away_from_origin(self, toy_params):
        """The bracket form agrees with the S_R matrix form once k is not tiny."""
        ks = np.linspace(0.1, 3.0, 50)
        np.testing.assert_allclose(sigma_root_bracket_form(ks, toy_params), cross_section(s_R(ks, toy_params), ks), rtol=1e-8)
        np.testing.assert_allclose(sigma_root_bracket_form(ks, toy_params), sigma_root(ks, toy_params), rtol=1e-8)

    def test_bracket_form_stays_finite_near_origin(self, toy_params):
        """The bracket form tends to sigma_R(0) instead of growing like 1/k^2."""
        ks = np.array([0.01, 0.1, 0.5, 1.0])
        values = sigma_root_bracket_form(ks, toy_params)
        np.testing.assert_allclose(values, cross_section(s_R(ks, toy_params), ks), rtol=1e-8)
        assert values[0] == pytest.approx(SIGMA_R_AT_ZERO, rel=0.01)

    def test_singular_parameters_rejected(self, figure_grid):
        """cross_sections needs d < 0."""
        with pytest.raises(SingularLimitError):
            cross_sections(figure_grid, ModelParams.at_singularity(a1=3.0, b=0.5))

    def test_negative_b_gives_emission(self, figure_grid):
        """b < 0 makes sigma_r negative."""
        xs = cross_sections(figure_grid, ModelParams(a1=3.0, b=-0.5, d=-0.1))
        assert np.all(xs.sigma_r < 0)


class TestLimits:
    """Test boundary values."""

    def test_sigma_R_at_zero(self, toy_params):
        """sigma_R(0+) = 4 pi d^2 / (b^2 + d^2)^2 ~ 1.8589."""
        assert sigma_R_at_zero(toy_params) == pytest.approx(SIGMA_R_AT_ZERO, rel=1e-12)
        assert sigma_R_at_zero(toy_params) == pytest.approx(1.8589, abs=1e-4)
        assert float(sigma_root(1e-6, toy_params)) == pytest.approx(SIGMA_R_AT_ZERO, rel=1e-6)

    def test_sigma_R_vanishes_at_high_energy(self, toy_params):
        """sigma_R(50) < 1e-2."""
        assert float(sigma_root(50.0, toy_params)) < 1e-2

    def test_sigma0_at_zero(self, toy_params):
        """sigma0(0+) = 4 pi / a1^2."""
        assert sigma0_at_zero(toy_params) == pytest.approx(SIGMA0_AT_ZERO)
        xs = cross_sections(KGrid(1e-6, 1.0, 10), toy_params)
        assert xs.sigma0[0] == pytest.approx(SIGMA0_AT_ZERO, rel=1e-10)

    def test_sigma_R_slope_at_zero(self, toy_params):
        """d sigma_R / dE at E = 0 matches a finite difference in E."""
        E = 1e-6
        numeric = (float(sigma_root(np.sqrt(2 * E), toy_params)) - float(sigma_root(np.sqrt(E), toy_params))) / E
        assert sigma_R_slope_at_zero(toy_params) == pytest.approx(numeric, rel=1e-3)
        assert sigma_R_slope_at_zero(toy_params) > 0

    def test_sigma_R_slope_sign(self):
        """The slope is negative once b^2 < d^2 / 2."""
        assert sigma_R_slope_at_zero(ModelParams(a1=3.0, b=0.1, d=-1.0)) < 0


class TestPeaks:
    """Test the Breit-Wigner and root lines."""

    def test_breit_wigner_peak(self, toy_params):
        """sigma_BW peaks at E = 0.24 with height 16 pi."""
        k0 = np.sqrt(BW_PEAK_ENERGY)
        assert float(sigma_breit_wigner(k0, toy_params)) == pytest.approx(BW_PEAK_HEIGHT, rel=1e-12)
        assert float(sigma_breit_wigner(k0 * 1.01, toy_params)) < BW_PEAK_HEIGHT

    def test_root_maximum(self, toy_params):
        """sigma_R peaks near k = 0.5778 at 28.955, about half the Breit-Wigner peak."""
        k_peak, sigma_peak = sigma_R_maximum(toy_params)
        assert k_peak == pytest.approx(SIGMA_R_PEAK_K, abs=1e-3)
        assert sigma_peak == pytest.approx(SIGMA_R_PEAK_HEIGHT, rel=1e-3)
        assert abs(sigma_peak - BW_PEAK_HEIGHT / 2) < 0.15 * sigma_peak

    def test_root_without_peak(self):
        """A broad line with b^2 < d^2 / 2 has no interior maximum."""
        with pytest.raises(NoInteriorPeakError):
            sigma_R_maximum(ModelParams(a1=3.0, b=0.1, d=-1.0))


class TestSingularLimit:
    """Test the d = 0 diagnostics."""

    def test_abs_s_H_vanishes_at_b(self):
        """|S_H| has its zero at k = b."""
        diagnostics = singular_limit_diagnostics(KGrid(0.01, 1.0, 1000), b=0.5, a1=3.0)
        assert diagnostics.k[np.argmin(diagnostics.abs_SH)] == pytest.approx(0.5, abs=1e-3)
        assert diagnostics.abs_SH.min() < 1e-3

    def test_total_is_sum(self):
        """sigma_t = sigma_e + sigma_r at the singularity too."""
        diagnostics = singular_limit_diagnostics(KGrid(0.01, 1.0, 100), b=0.5, a1=3.0)
        assert np.allclose(diagnostics.sigma_t, diagnostics.sigma_e + diagnostics.sigma_r)
