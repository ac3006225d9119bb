"""Asymptotic matching psi -> A e^{ikx} + B e^{-ikx} and the numeric S-matrix -A/B."""

from dataclasses import dataclass

import numpy as np
from loguru import logger

from susyscatter.core.params import WaveSolution
from susyscatter.core.potentials import RadialPotential
from susyscatter.errors import MatchingWindowError, ParameterError
from susyscatter.oracle.integrators import IntegrationMethod, IntegratorSpec, integrate

MATCH_AGREEMENT = 1e-6
TAIL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class AmplitudePair:
    """Outgoing and incoming amplitudes of a scattering solution at wavenumber k."""

    A: complex
    B: complex
    k: float

    def __post_init__(self) -> None:
        if abs(self.A) + abs(self.B) == 0:
            raise ParameterError(f"both asymptotic amplitudes vanish at k={self.k}")

    @property
    def smatrix(self) -> complex:
        return -self.A / self.B

    def scaled(self, factor: complex) -> "AmplitudePair":
        return AmplitudePair(A=self.A * factor, B=self.B * factor, k=self.k)


def _amplitudes_at(sol: WaveSolution, k: float, index: int) -> tuple[complex, complex]:
    x = float(sol.grid.nodes[index])
    psi = complex(sol.values[index])
    slope = complex(sol.derivatives[index])
    A = 0.5 * (psi + slope / (1j * k)) * np.exp(-1j * k * x)
    B = 0.5 * (psi - slope / (1j * k)) * np.exp(1j * k * x)
    return complex(A), complex(B)


def _nearest_node(sol: WaveSolution, x: float) -> int:
    index = int(round((x - sol.grid.x_min) / sol.grid.spacing))
    if not 0 <= index < sol.grid.n:
        raise MatchingWindowError(f"matching radius x={x:.6g} lies outside the solution grid [{sol.grid.x_min:.6g}, {sol.grid.x_max:.6g}]")
    return index


def extract_amplitudes(
    sol: WaveSolution,
    k: float,
    x_match: float,
    potential: RadialPotential | None = None,
    agreement: float = MATCH_AGREEMENT,
) -> AmplitudePair:
    """Solve the 2x2 matching system at x_match and cross-validate it at x_match - 1/k.

    Args:
        sol: Solution sampled past x_match
        k: Wavenumber
        x_match: Matching radius; the nearest node is used
        potential: When given, |U(x)| < 1e-12 k^2 is required at both matching points
        agreement: Largest accepted relative disagreement of the two extractions

    Returns:
        AmplitudePair from the outer matching point

    Raises:
        MatchingWindowError: If the tail is not yet asymptotic
    """
    outer = _nearest_node(sol, x_match)
    inner = _nearest_node(sol, x_match - 1.0 / k)

    if potential is not None:
        tail = np.abs(potential(sol.grid.nodes[[inner, outer]]))
        if np.any(tail >= TAIL_TOLERANCE * k**2):
            raise MatchingWindowError(f"potential {float(tail.max()):.3e} has not decayed at the matching radius (k={k})")

    A, B = _amplitudes_at(sol, k, outer)
    A_in, B_in = _amplitudes_at(sol, k, inner)
    disagreement = (abs(A - A_in) + abs(B - B_in)) / (abs(A) + abs(B))
    if disagreement > agreement:
        x_in, x_out = sol.grid.nodes[inner], sol.grid.nodes[outer]
        logger.warning(f"Matching points x={x_in:.4g} and x={x_out:.4g} disagree by {disagreement:.3e} at k={k}")
        raise MatchingWindowError(
            f"amplitude extractions at k={k} disagree by {disagreement:.3e} > {agreement:.1e}; tail not asymptotic or step too coarse"
        )

    return AmplitudePair(A=A, B=B, k=k)


def numeric_smatrix(
    potential: RadialPotential,
    k: float,
    spec: IntegratorSpec | None = None,
    *,
    a1: float | None = None,
    method: IntegrationMethod = IntegrationMethod.NUMEROV,
    seed_scale: complex = 1.0,
) -> complex:
    """-A/B from an integration of ``potential`` at ``k``.

    Either ``spec`` or ``a1`` (to build the default spec) must be given.

    Raises:
        ParameterError: If neither ``spec`` nor ``a1`` is given
        MatchingWindowError: If the two matching points disagree
        IntegrationError: If the integration fails
    """
    if spec is None:
        if a1 is None:
            raise ParameterError("numeric_smatrix needs an IntegratorSpec or a1 for the default one")
        spec = IntegratorSpec.default(k, potential, a1=a1, method=method)

    sol = integrate(potential, k, spec, seed_scale=seed_scale)
    return extract_amplitudes(sol, k, spec.x_match, potential=potential).smatrix
