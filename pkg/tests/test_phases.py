"""Tests for phase unwrapping and phase derivatives."""

import numpy as np
import pytest

from susyscatter.core.params import ComplexCurve, KGrid, ModelParams, RealCurve
from susyscatter.errors import DomainError, GridTooCoarseError
from susyscatter.smatrix.analytic import s0, s_BW, s_h, s_H, s_R
from susyscatter.smatrix.phases import phase_derivative, phase_shift
from tests.fixtures.reference_values import A1, B, BW_WIDTH, D


@pytest.fixture
def toy_params() -> ModelParams:
    """Provide the a1 = 3, b = 0.5, d = -0.1 parameter set."""
    return ModelParams(a1=A1, b=B, d=D)


@pytest.fixture
def momenta() -> np.ndarray:
    """Provide the 2000-point grid on [1e-3, 3]."""
    return KGrid(1e-3, 3.0, 2000).nodes


def _delta(ks: np.ndarray, S: np.ndarray, label: str = "S") -> RealCurve:
    return phase_shift(ComplexCurve(k=ks, values=S, label=label))


class TestPhaseShift:
    """Test unwrapping and anchoring."""

    def test_background_phase(self, toy_params, momenta):
        """delta0 = -arctan(k / a1)."""
        delta = _delta(momenta, s0(momenta, toy_params), "S0")
        assert np.allclose(delta.values, -np.arctan(momenta / 3.0), atol=1e-12)
        assert delta.label == "delta[S0]"

    def test_anchor_interval(self, toy_params, momenta):
        """The phase at k_max lies in (-pi/2, pi/2]."""
        for S in (s_R(momenta, toy_params), s_BW(momenta, toy_params), s_h(momenta, toy_params)):
            last = _delta(momenta, S).values[-1]
            assert -np.pi / 2 < last <= np.pi / 2

    def test_continuity(self, toy_params, momenta):
        """Neighbouring phases differ by less than pi/4."""
        delta = _delta(momenta, s_h(momenta, toy_params))
        assert np.max(np.abs(np.diff(delta.values))) < np.pi / 4

    def test_half_phase_relation(self, toy_params, momenta):
        """delta_BW - 2 delta_R is a constant multiple of pi."""
        turns = (_delta(momenta, s_BW(momenta, toy_params)).values - 2 * _delta(momenta, s_R(momenta, toy_params)).values) / np.pi
        assert np.allclose(turns, np.round(turns[0]), atol=1e-9)

    def test_breit_wigner_phase_rises_by_pi(self, toy_params, momenta):
        """delta_BW rises by about pi across the resonance."""
        delta = _delta(momenta, s_BW(momenta, toy_params)).values
        assert delta[-1] - delta[0] == pytest.approx(np.pi, abs=0.1)

    def test_non_unimodular_rejected(self, toy_params, momenta):
        """S_H is not unimodular and has no real phase shift."""
        with pytest.raises(DomainError, match="unimodular"):
            _delta(momenta, s_H(momenta, toy_params), "SH")

    def test_coarse_grid_rejected(self):
        """An arg S step of 2 rad between neighbours is too coarse to follow."""
        ks = np.arange(1.0, 10.0)
        with pytest.raises(GridTooCoarseError):
            _delta(ks, np.exp(2j * ks))


class TestPhaseDerivative:
    """Test slopes of phase curves."""

    def test_time_delay_of_root_matrix(self, toy_params, momenta):
        """d delta_R / dE at E0 is close to 1 / |4 b d|."""
        delta_R = _delta(momenta, s_R(momenta, toy_params))
        slope = phase_derivative(delta_R, np.sqrt(toy_params.resonance_energy), energy=True)
        assert slope == pytest.approx(1 / BW_WIDTH, rel=0.05)

    def test_slope_grows_towards_singularity(self, momenta):
        """d delta_h / dk at k = b increases as d runs -1, -0.5, -0.1."""
        slopes = []
        for d in (-1.0, -0.5, -0.1):
            p = ModelParams(a1=3.0, b=0.5, d=d)
            slopes.append(phase_derivative(_delta(momenta, s_h(momenta, p)), 0.5))
        assert slopes[0] < slopes[1] < slopes[2]
        # delta_R contributes 0.75, 1.2 and 5.05; delta0 adds -a1 / (a1^2 + b^2)
        background = -3.0 / 9.25
        assert slopes == pytest.approx([0.75 + background, 1.2 + background, 5.0495 + background], rel=1e-2)

    def test_background_slope(self, toy_params, momenta):
        """d delta0 / dk = -a1 / (a1^2 + k^2)."""
        delta = _delta(momenta, s0(momenta, toy_params))
        assert phase_derivative(delta, 1.0) == pytest.approx(-0.3, rel=1e-5)

    def test_outside_grid(self, toy_params, momenta):
        """Slopes are not extrapolated."""
        delta = _delta(momenta, s0(momenta, toy_params))
        with pytest.raises(DomainError):
            phase_derivative(delta, 3.5)
