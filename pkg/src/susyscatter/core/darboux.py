"""Darboux map L = -d/dx + w from v0 scattering states to V scattering states."""

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from susyscatter.core.params import ModelParams, PotentialTag, WaveSolution
from susyscatter.core.potentials import potential_V, superpotential_w, v0
from susyscatter.errors import ParameterError, PreconditionError
from susyscatter.utils.finite_diff import grid_second_derivative

DEFAULT_RESIDUAL_TOLERANCE = 1e-5


def potential_values(sol: WaveSolution, p: ModelParams) -> NDArray[np.complex128]:
    """Potential that ``sol`` claims to solve, sampled on its grid."""
    xs = sol.grid.nodes
    if sol.potential_tag is PotentialTag.V0:
        return v0(xs, p).astype(complex)
    if sol.potential_tag is PotentialTag.V_COMPLEX:
        return potential_V(xs, p)
    return np.zeros_like(xs, dtype=complex)


def equation_residual(sol: WaveSolution, potential: NDArray, energy: complex | None = None) -> float:
    """Relative residual max|-psi'' + (U - E) psi| / max|psi| over interior nodes.

    psi'' is taken from a five-point stencil on the solution's own grid.

    Args:
        sol: Sampled solution
        potential: Potential U sampled on the same grid
        energy: Eigenvalue E, defaults to k^2
    """
    energy = sol.k**2 if energy is None else energy
    scale = float(np.max(np.abs(sol.values)))
    if scale == 0.0:
        raise ParameterError("cannot measure the residual of an identically vanishing solution")
    second = grid_second_derivative(sol.values, sol.grid.spacing)
    residual = -second + (potential[2:-2] - energy) * sol.values[2:-2]
    return float(np.max(np.abs(residual)) / scale)


def darboux_map(
    psi: WaveSolution,
    p: ModelParams,
    tolerance: float = DEFAULT_RESIDUAL_TOLERANCE,
) -> WaveSolution:
    """Apply L = -d/dx + w to a v0 scattering state.

    The result phi = -psi' + w psi solves the V problem at the same k. Its derivative is
    evaluated in closed form, phi' = (k^2 - alpha - w^2) psi + w psi', using the Riccati
    identity w' + w^2 = v0 - alpha. The (k^2 - alpha)^(-1/2) normalisation is dropped.

    Args:
        psi: Solution of -psi'' + v0 psi = k^2 psi on a grid with x_min > 0
        p: Model parameters
        tolerance: Largest accepted relative residual of ``psi``

    Raises:
        PreconditionError: If ``psi`` is not a v0 solution within ``tolerance``
    """
    logger.debug(f">>> darboux_map() called for k={psi.k}")

    if psi.potential_tag is not PotentialTag.V0:
        raise PreconditionError(f"darboux_map expects a v0 solution, got {psi.potential_tag}")

    residual = equation_residual(psi, potential_values(psi, p))
    if residual > tolerance:
        logger.warning(f"Input residual {residual:.3e} exceeds {tolerance:.1e} at k={psi.k}")
        raise PreconditionError(f"psi does not solve the v0 equation at k={psi.k}: relative residual {residual:.3e} > {tolerance:.1e}")

    w = superpotential_w(psi.grid.nodes, p)
    values = -psi.derivatives + w * psi.values
    derivatives = (psi.k**2 - p.alpha - w**2) * psi.values + w * psi.derivatives

    logger.debug(f"<<< darboux_map() FINISHED (input residual {residual:.2e})")
    return WaveSolution(
        k=psi.k,
        grid=psi.grid,
        values=values,
        derivatives=derivatives,
        potential_tag=PotentialTag.V_COMPLEX,
        log_scale=psi.log_scale,
    )
