"""Tests for parameter sets, grids and sampled curves."""

import numpy as np
import pytest

from susyscatter.core.params import ComplexCurve, KGrid, ModelParams, PotentialTag, RealCurve, WaveSolution, XGrid
from susyscatter.errors import ConsistencyError, ParameterError
from tests.fixtures.reference_values import A1, B, D


@pytest.fixture
def toy_params() -> ModelParams:
    """Provide the a1 = 3, b = 0.5, d = -0.1 parameter set."""
    return ModelParams(a1=A1, b=B, d=D)


class TestModelParams:
    """Test validation and derived quantities of ModelParams."""

    def test_derived_constants(self, toy_params):
        """a, alpha, E0 and Gamma follow from (b, d)."""
        assert toy_params.a == complex(-0.1, 0.5)
        assert toy_params.alpha == pytest.approx(-complex(-0.1, 0.5) ** 2)
        assert toy_params.resonance_energy == pytest.approx(0.24)
        assert toy_params.resonance_width == pytest.approx(0.2)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"a1": 0.0, "b": 0.5, "d": -0.1},
            {"a1": -1.0, "b": 0.5, "d": -0.1},
            {"a1": 3.0, "b": 0.0, "d": -0.1},
            {"a1": 3.0, "b": 0.5, "d": 0.0},
            {"a1": 3.0, "b": 0.5, "d": 0.2},
            {"a1": float("nan"), "b": 0.5, "d": -0.1},
            {"a1": 3.0, "b": float("inf"), "d": -0.1},
        ],
    )
    def test_invalid_parameters_rejected(self, kwargs):
        """a1 <= 0, b = 0, d >= 0 and non-finite values raise ParameterError."""
        with pytest.raises(ParameterError):
            ModelParams(**kwargs)

    def test_singular_only_through_constructor(self):
        """d = 0 is reachable only through at_singularity."""
        p = ModelParams.at_singularity(a1=3.0, b=0.5)
        assert p.singular
        assert p.d == 0.0

        with pytest.raises(ParameterError):
            ModelParams(a1=3.0, b=0.5, d=-0.1, singular=True)

    def test_with_d_keeps_a1_and_b(self, toy_params):
        """with_d replaces d only."""
        other = toy_params.with_d(-0.5)
        assert (other.a1, other.b, other.d) == (A1, B, -0.5)

    def test_negative_b_is_valid(self):
        """b < 0 is allowed; it describes an emitting partner."""
        assert ModelParams(a1=3.0, b=-0.5, d=-0.1).b == -0.5


class TestGrids:
    """Test XGrid and KGrid validation."""

    def test_for_model_defaults(self, toy_params):
        """Default x-grid spans [1e-3/a1, 25/a1]."""
        grid = XGrid.for_model(toy_params, 101)
        assert grid.x_min == pytest.approx(1e-3 / 3)
        assert grid.x_max == pytest.approx(25 / 3)
        assert grid.nodes.shape == (101,)

    def test_for_model_rejects_short_extent(self, toy_params):
        """a1 * x_max below 20 leaves potential tails on the grid."""
        with pytest.raises(ParameterError, match="too short"):
            XGrid.for_model(toy_params, 101, x_max=5.0)

    @pytest.mark.parametrize(
        "args",
        [(-0.1, 1.0, 10), (1.0, 1.0, 10), (0.0, 1.0, 4)],
    )
    def test_invalid_xgrid(self, args):
        """Negative start, empty extent and too few nodes are rejected."""
        with pytest.raises(ParameterError):
            XGrid(*args)

    def test_kgrid_requires_positive_k(self):
        """k_min must be strictly positive."""
        with pytest.raises(ParameterError, match="positive"):
            KGrid(k_min=0.0, k_max=3.0, n=10)

    def test_kgrid_spacing(self):
        """Linear and geometric spacing both hit the endpoints."""
        linear = KGrid(1e-3, 3.0, 2000).nodes
        geometric = KGrid(0.05, 10.0, 20, log_spaced=True).nodes
        assert linear[0] == pytest.approx(1e-3)
        assert linear[-1] == pytest.approx(3.0)
        assert geometric[-1] / geometric[-2] == pytest.approx(geometric[1] / geometric[0])


class TestCurves:
    """Test curve and wave-solution containers."""

    def test_curve_requires_increasing_k(self):
        """Non-monotone grids are rejected."""
        with pytest.raises(ParameterError, match="increasing"):
            RealCurve(k=np.array([1.0, 0.5, 2.0]), values=np.zeros(3))

    def test_curve_shape_mismatch(self):
        """k and values must have the same shape."""
        with pytest.raises(ParameterError):
            ComplexCurve(k=np.array([1.0, 2.0]), values=np.zeros(3, dtype=complex))

    def test_real_curve_rejects_complex(self):
        """RealCurve holds real samples only."""
        with pytest.raises(ParameterError, match="complex"):
            RealCurve(k=np.array([1.0, 2.0]), values=np.array([1.0 + 1j, 2.0]))

    def test_real_curve_energies(self):
        """energies is k^2."""
        curve = RealCurve(k=np.array([0.5, 2.0]), values=np.zeros(2))
        assert np.allclose(curve.energies, [0.25, 4.0])

    def test_wave_solution_rejects_non_finite(self):
        """A NaN sample is a consistency error."""
        grid = XGrid(0.1, 1.0, 5)
        values = np.array([0, 1, np.nan, 1, 0], dtype=complex)
        with pytest.raises(ConsistencyError):
            WaveSolution(k=1.0, grid=grid, values=values, derivatives=np.zeros(5, dtype=complex), potential_tag=PotentialTag.FREE)

    def test_wave_solution_shape(self):
        """Samples must cover every node."""
        grid = XGrid(0.1, 1.0, 5)
        with pytest.raises(ParameterError):
            WaveSolution(
                k=1.0, grid=grid, values=np.zeros(4, dtype=complex), derivatives=np.zeros(5, dtype=complex), potential_tag=PotentialTag.FREE
            )
