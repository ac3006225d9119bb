"""Tests for the Darboux map between v0 and V scattering states."""

import numpy as np
import pytest

from susyscatter.core.darboux import darboux_map, equation_residual, potential_values
from susyscatter.core.params import ModelParams, PotentialTag, WaveSolution, XGrid
from susyscatter.core.potentials import potential_V, scattering_state
from susyscatter.errors import ParameterError, PreconditionError
from susyscatter.smatrix.analytic import background_amplitudes
from tests.fixtures.reference_values import A1, B, D


@pytest.fixture
def toy_params() -> ModelParams:
    """Provide the a1 = 3, b = 0.5, d = -0.1 parameter set."""
    return ModelParams(a1=A1, b=B, d=D)


@pytest.fixture
def grid(toy_params) -> XGrid:
    """Provide a fine grid that keeps clear of the origin."""
    return XGrid.for_model(toy_params, 20001, x_min=0.01 / A1)


class TestDarbouxMap:
    """Test phi = -psi' + w psi."""

    @pytest.mark.parametrize("k", [0.25, 0.5, 1.0, 2.0, 4.0])
    def test_image_solves_partner_equation(self, toy_params, grid, k):
        """L psi0 solves -phi'' + V phi = k^2 phi."""
        phi = darboux_map(scattering_state(k, grid, toy_params), toy_params)
        assert phi.potential_tag is PotentialTag.V_COMPLEX
        assert equation_residual(phi, potential_values(phi, toy_params)) < 1e-5

    def test_image_vanishes_at_origin(self, toy_params):
        """phi(0+) -> 0."""
        grid = XGrid(x_min=1e-4, x_max=1.0, n=1001)
        phi = darboux_map(scattering_state(1.0, grid, toy_params), toy_params)
        assert abs(phi.values[0]) < 1e-3 * np.max(np.abs(phi.values))

    def test_asymptotic_amplitudes(self, toy_params, grid):
        """The e^{ikx} component of the image is multiplied by a - ik."""
        k = 1.0
        phi = darboux_map(scattering_state(k, grid, toy_params), toy_params)
        A0, B0 = background_amplitudes(k, toy_params)
        a = toy_params.a
        expected = A0 * (a - 1j * k) * np.exp(1j * k * phi.grid.nodes[-1]) + B0 * (a + 1j * k) * np.exp(-1j * k * phi.grid.nodes[-1])
        assert phi.values[-1] == pytest.approx(expected, rel=1e-10)

    def test_rejects_non_background_solution(self, toy_params, grid):
        """Only v0 states can be mapped."""
        state = scattering_state(1.0, grid, toy_params)
        partner = WaveSolution(
            k=state.k, grid=state.grid, values=state.values, derivatives=state.derivatives, potential_tag=PotentialTag.V_COMPLEX
        )
        with pytest.raises(PreconditionError, match="v0 solution"):
            darboux_map(partner, toy_params)

    def test_rejects_wrong_momentum(self, toy_params, grid):
        """A state labelled with the wrong k fails the residual precondition."""
        state = scattering_state(1.0, grid, toy_params)
        mislabelled = WaveSolution(
            k=1.5, grid=state.grid, values=state.values, derivatives=state.derivatives, potential_tag=PotentialTag.V0
        )
        with pytest.raises(PreconditionError, match="residual"):
            darboux_map(mislabelled, toy_params)

    def test_keeps_log_scale(self, toy_params, grid):
        """Renormalisation bookkeeping survives the map."""
        state = scattering_state(1.0, grid, toy_params)
        scaled = WaveSolution(
            k=1.0, grid=grid, values=state.values, derivatives=state.derivatives, potential_tag=PotentialTag.V0, log_scale=2.5
        )
        assert darboux_map(scaled, toy_params).log_scale == 2.5


class TestEquationResidual:
    """Test the five-point residual used as precondition."""

    def test_free_sine(self):
        """sin(kx) solves the free equation."""
        grid = XGrid(0.0, 10.0, 10001)
        xs = grid.nodes
        sol = WaveSolution(
            k=2.0,
            grid=grid,
            values=np.sin(2 * xs).astype(complex),
            derivatives=2 * np.cos(2 * xs).astype(complex),
            potential_tag=PotentialTag.FREE,
        )
        assert equation_residual(sol, np.zeros(grid.n)) < 1e-8

    def test_zero_solution_rejected(self):
        """The residual of psi = 0 is undefined."""
        grid = XGrid(0.0, 1.0, 11)
        zeros = np.zeros(11, dtype=complex)
        sol = WaveSolution(k=1.0, grid=grid, values=zeros, derivatives=zeros, potential_tag=PotentialTag.FREE)
        with pytest.raises(ParameterError):
            equation_residual(sol, np.zeros(11))

    def test_partner_potential_values(self, toy_params, grid):
        """potential_values picks V for partner states."""
        state = scattering_state(1.0, grid, toy_params)
        phi = darboux_map(state, toy_params)
        assert np.allclose(potential_values(phi, toy_params), potential_V(grid.nodes, toy_params))
