"""Fixed-step integrators for the radial equation -psi'' + (U(x) - k^2) psi = 0.

Two independent schemes are provided:
- Numerov (default): fourth order on psi'' = (U - k^2) psi, derivative recovered from
  a corrected central difference
- RK4: classical Runge-Kutta on the first-order system (psi, psi'), used as a
  cross-check backend

Both seed the regular solution from its origin series psi = x^m (1 + c x^2), where m
is the potential's origin order and c = (U_reg(0) - k^2) / (2 (2m + 1)).

Architecture:
    - ``IntegratorSpec`` carries the step and matching geometry for one k
    - ``Integrator`` subclasses implement ``_march`` only; seeding, renormalisation
      bookkeeping and packing into a WaveSolution live in the base class
    - ``integrate`` picks the subclass from ``spec.method``
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from loguru import logger

from susyscatter.core.params import WaveSolution, XGrid
from susyscatter.core.potentials import RadialPotential
from susyscatter.errors import IntegrationError, ParameterError

# Accepted phase advance per step before a resolution warning is logged
PHASE_RESOLUTION = 0.05
RENORMALISE_EVERY = 1000


class IntegrationMethod(StrEnum):
    NUMEROV = "numerov"
    RK4 = "rk4"


@dataclass(frozen=True)
class IntegratorSpec:
    """Step and matching geometry of one integration.

    Attributes:
        method: Integration scheme
        step: Fixed step size h
        x_start: First node; the origin series seeds the solution there
        x_match: Matching radius; the integration runs two steps beyond it
        origin_order: Power m of the leading x^m behaviour at the origin
    """

    method: IntegrationMethod
    step: float
    x_start: float
    x_match: float
    origin_order: int

    def __post_init__(self) -> None:
        if not self.step > 0:
            raise ParameterError(f"integration step must be positive, got {self.step}")
        if self.x_start <= 0:
            raise ParameterError(f"x_start must be positive, got {self.x_start}")
        if self.x_match <= self.x_start + 2 * self.step:
            raise ParameterError(f"x_match={self.x_match} leaves no room to integrate from x_start={self.x_start}")
        if self.origin_order < 1:
            raise ParameterError(f"origin_order must be at least 1, got {self.origin_order}")

    @classmethod
    def default(
        cls,
        k: float,
        potential: RadialPotential,
        *,
        a1: float,
        method: IntegrationMethod = IntegrationMethod.NUMEROV,
        n_x: int | None = None,
        x_max: float | None = None,
    ) -> "IntegratorSpec":
        """Spec that resolves both the wavelength and the potential's decay length.

        step = min(0.01/k, 0.005/a1), or x_max / (n_x - 1) when ``n_x`` is given.
        x_match = 25/a1 + 1/k keeps the second matching point at least 25/a1 out.

        Args:
            k: Wavenumber
            potential: Potential to integrate
            a1: Decay rate scale of the potential
            method: Integration scheme
            n_x: Optional node count that overrides the automatic step
            x_max: Extent used with ``n_x``, default 25/a1
        """
        if k <= 0:
            raise ParameterError(f"k must be positive, got {k}")
        if n_x is not None:
            if n_x < 5:
                raise ParameterError(f"n_x must be at least 5, got {n_x}")
            step = (25.0 / a1 if x_max is None else x_max) / (n_x - 1)
        else:
            step = min(0.01 / k, 0.005 / a1)

        if potential.singularity_strength > 0:
            x_start = max(step, 0.05 / a1) if method is IntegrationMethod.RK4 else step
        else:
            x_start = 0.5 * step

        return cls(
            method=method,
            step=step,
            x_start=x_start,
            x_match=25.0 / a1 + 1.0 / k,
            origin_order=potential.origin_order,
        )

    def halved(self) -> "IntegratorSpec":
        """Same geometry at half the step."""
        return IntegratorSpec(
            method=self.method,
            step=0.5 * self.step,
            x_start=self.x_start,
            x_match=self.x_match,
            origin_order=self.origin_order,
        )

    def node_count(self) -> int:
        return math.ceil((self.x_match - self.x_start) / self.step) + 3


def origin_series(x: float, k: float, potential: RadialPotential, order: int) -> tuple[complex, complex]:
    """(psi, psi') of the regular solution x^m (1 + c x^2) near the origin."""
    c = (potential.origin_value - k**2) / (2 * (2 * order + 1))
    value = x**order * (1 + c * x**2)
    slope = order * x ** (order - 1) + (order + 2) * c * x ** (order + 1)
    return complex(value), complex(slope)


class Integrator(ABC):
    """Base class for fixed-step radial integrators.

    Subclasses march the solution outwards on a uniform grid and return values and
    derivatives at every node together with the accumulated log-scale.
    """

    method: IntegrationMethod

    def __init__(self, spec: IntegratorSpec, seed_scale: complex = 1.0):
        if spec.method is not self.method:
            raise ParameterError(f"{type(self).__name__} cannot run a {spec.method} spec")
        if seed_scale == 0:
            raise ParameterError("seed_scale must be non-zero")
        self.spec = spec
        self.seed_scale = complex(seed_scale)

    def run(self, potential: RadialPotential, k: float) -> WaveSolution:
        spec = self.spec
        n = spec.node_count()
        grid = XGrid(x_min=spec.x_start, x_max=spec.x_start + (n - 1) * spec.step, n=n)

        if spec.step * k >= PHASE_RESOLUTION:
            logger.warning(f"Step {spec.step:.3e} gives phase advance {spec.step * k:.3f} per step at k={k}; results may be inaccurate")

        values, derivatives, log_scale = self._march(potential, k, grid)
        values_arr = np.asarray(values, dtype=complex)
        derivatives_arr = np.asarray(derivatives, dtype=complex)
        if not (np.all(np.isfinite(values_arr)) and np.all(np.isfinite(derivatives_arr))):
            raise IntegrationError(f"{self.method} integration at k={k} produced non-finite values")

        return WaveSolution(
            k=k,
            grid=grid,
            values=values_arr,
            derivatives=derivatives_arr,
            potential_tag=potential.tag,
            log_scale=log_scale,
        )

    @abstractmethod
    def _march(self, potential: RadialPotential, k: float, grid: XGrid) -> tuple[list[complex], list[complex], float]:
        """Integrate on ``grid`` and return (values, derivatives, log_scale)."""


class NumerovIntegrator(Integrator):
    method = IntegrationMethod.NUMEROV

    def _march(self, potential: RadialPotential, k: float, grid: XGrid) -> tuple[list[complex], list[complex], float]:
        h = grid.spacing
        xs = np.append(grid.nodes, grid.x_max + h)
        # psi'' = g psi
        g = (np.asarray(potential(xs), dtype=complex) - k**2).tolist()
        t = [1 - h * h * gn / 12 for gn in g]
        order = self.spec.origin_order

        psi0, slope0 = origin_series(float(xs[0]), k, potential, order)
        psi1, _ = origin_series(float(xs[1]), k, potential, order)
        slope0 *= self.seed_scale
        psi = [psi0 * self.seed_scale, psi1 * self.seed_scale]
        log_scale = 0.0

        for i in range(1, len(xs) - 1):
            nxt = (2 * (1 + 5 * h * h * g[i] / 12) * psi[i] - t[i - 1] * psi[i - 1]) / t[i + 1]
            if nxt != nxt:
                raise IntegrationError(f"Numerov produced NaN at x={xs[i + 1]:.6g}, k={k}")
            psi.append(nxt)
            if i % RENORMALISE_EVERY == 0:
                scale = max(abs(psi[-1]), abs(psi[-2]))
                if scale > 0:
                    psi = [value / scale for value in psi]
                    slope0 /= scale
                    log_scale += math.log(scale)

        gpsi = [gn * value for gn, value in zip(g, psi, strict=True)]
        derivatives = [slope0]
        for i in range(1, len(xs) - 1):
            derivatives.append((psi[i + 1] - psi[i - 1]) / (2 * h) - h * (gpsi[i + 1] - gpsi[i - 1]) / 12)

        return psi[:-1], derivatives, log_scale


class RK4Integrator(Integrator):
    method = IntegrationMethod.RK4

    def _march(self, potential: RadialPotential, k: float, grid: XGrid) -> tuple[list[complex], list[complex], float]:
        h = grid.spacing
        nodes = grid.nodes
        g_full = (np.asarray(potential(nodes), dtype=complex) - k**2).tolist()
        g_half = (np.asarray(potential(nodes[:-1] + 0.5 * h), dtype=complex) - k**2).tolist()

        psi, slope = origin_series(float(nodes[0]), k, potential, self.spec.origin_order)
        psi, slope = psi * self.seed_scale, slope * self.seed_scale
        values = [psi]
        derivatives = [slope]
        log_scale = 0.0

        for i in range(len(nodes) - 1):
            g0, gm, g1 = g_full[i], g_half[i], g_full[i + 1]
            k1p, k1s = slope, g0 * psi
            k2p, k2s = slope + 0.5 * h * k1s, gm * (psi + 0.5 * h * k1p)
            k3p, k3s = slope + 0.5 * h * k2s, gm * (psi + 0.5 * h * k2p)
            k4p, k4s = slope + h * k3s, g1 * (psi + h * k3p)
            psi = psi + h * (k1p + 2 * k2p + 2 * k3p + k4p) / 6
            slope = slope + h * (k1s + 2 * k2s + 2 * k3s + k4s) / 6
            if psi != psi or slope != slope:
                raise IntegrationError(f"RK4 produced NaN at x={nodes[i + 1]:.6g}, k={k}")
            values.append(psi)
            derivatives.append(slope)

            if (i + 1) % RENORMALISE_EVERY == 0:
                scale = max(abs(psi), abs(slope))
                if scale > 0:
                    values = [value / scale for value in values]
                    derivatives = [value / scale for value in derivatives]
                    psi, slope = values[-1], derivatives[-1]
                    log_scale += math.log(scale)

        return values, derivatives, log_scale


_INTEGRATORS: dict[IntegrationMethod, type[Integrator]] = {
    IntegrationMethod.NUMEROV: NumerovIntegrator,
    IntegrationMethod.RK4: RK4Integrator,
}


def integrate(potential: RadialPotential, k: float, spec: IntegratorSpec, seed_scale: complex = 1.0) -> WaveSolution:
    """Integrate the radial equation from ``spec.x_start`` to just past ``spec.x_match``.

    Args:
        potential: Potential U(x) with its origin data
        k: Wavenumber, k > 0
        spec: Step and matching geometry
        seed_scale: Non-zero constant multiplying the origin seed

    Returns:
        WaveSolution with values and derivatives at every node

    Raises:
        ParameterError: If k <= 0 or the spec's origin order does not fit the potential
        IntegrationError: If stepping produces non-finite values
    """
    if k <= 0:
        raise ParameterError(f"k must be positive, got {k}")
    if spec.origin_order != potential.origin_order:
        raise ParameterError(
            f"spec origin order {spec.origin_order} does not match the {potential.tag} potential ({potential.origin_order})"
        )

    logger.debug(f">>> integrate() called: {potential.tag} k={k} method={spec.method} step={spec.step:.3e}")
    solution = _INTEGRATORS[spec.method](spec, seed_scale).run(potential, k)
    logger.debug(f"<<< integrate() FINISHED ({solution.grid.n} nodes, log_scale={solution.log_scale:.3g})")
    return solution


__all__ = [
    "IntegrationMethod",
    "Integrator",
    "IntegratorSpec",
    "NumerovIntegrator",
    "RK4Integrator",
    "integrate",
    "origin_series",
]
