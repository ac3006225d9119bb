"""Closed-form x-space objects of the toy model.

The background potential v0 = 2 a1^2 / sinh^2(a1 x) has singularity strength 1 at the
origin. Its SUSY partner V = v0 - 2 w' is built from the transformation function
u = exp(a x) (a1 coth(a1 x) - a), a = d + i b, which solves h0 u = alpha u with
alpha = -a^2.

Every function here is vectorised over x. Hyperbolic functions are written through
q = exp(-2 a1 x) so that nothing overflows at large a1 x.
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike, NDArray

from susyscatter.core.params import ModelParams, PotentialTag, WaveSolution, XGrid
from susyscatter.errors import ConsistencyError, DomainError


def _positive(x: ArrayLike, name: str) -> NDArray[np.float64]:
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise DomainError(f"{name} is singular at the origin and needs x > 0, got min x = {xs.min()}")
    return xs


def _non_negative(x: ArrayLike, name: str) -> NDArray[np.float64]:
    xs = np.asarray(x, dtype=float)
    if np.any(xs < 0):
        raise DomainError(f"{name} is defined on x >= 0, got min x = {xs.min()}")
    return xs


def _coth(y: NDArray) -> NDArray:
    q = np.exp(-2 * y)
    return (1 + q) / -np.expm1(-2 * y)


def v0(x: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Background potential 2 a1^2 / sinh^2(a1 x).

    Raises:
        DomainError: If any x <= 0
    """
    y = p.a1 * _positive(x, "v0")
    q = np.exp(-2 * y)
    return 8 * p.a1**2 * q / np.expm1(-2 * y) ** 2


def v0_regular_part_at_origin(p: ModelParams) -> float:
    """Limit of v0(x) - 2/x^2 as x -> 0, i.e. -2 a1^2 / 3."""
    return -2 * p.a1**2 / 3


def psi0(k: float, x: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Unnormalised regular scattering state a1 coth(a1 x) sin(kx) - k cos(kx) of v0."""
    if k <= 0:
        raise DomainError(f"psi0 needs k > 0, got {k}")
    xs = _positive(x, "psi0")
    return p.a1 * _coth(p.a1 * xs) * np.sin(k * xs) - k * np.cos(k * xs)


def psi0_derivative(k: float, x: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """x-derivative of :func:`psi0`."""
    if k <= 0:
        raise DomainError(f"psi0 needs k > 0, got {k}")
    xs = _positive(x, "psi0")
    coth = _coth(p.a1 * xs)
    # a1^2 / sinh^2 = v0 / 2
    return -0.5 * v0(xs, p) * np.sin(k * xs) + p.a1 * k * coth * np.cos(k * xs) + k**2 * np.sin(k * xs)


def jost_u(x: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Transformation function u = exp(a x) (a1 coth(a1 x) - a)."""
    xs = _positive(x, "jost_u")
    return np.exp(p.a * xs) * (p.a1 * _coth(p.a1 * xs) - p.a)


def superpotential_w(x: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Superpotential w = u'/u in closed form.

    w = a - a1^2 / (sinh(a1 x) [a1 cosh(a1 x) - a sinh(a1 x)]); tends to a at infinity
    and behaves as -1/x at the origin.
    """
    y = p.a1 * _positive(x, "superpotential_w")
    q = np.exp(-2 * y)
    a, a1 = p.a, p.a1
    return a - 4 * a1**2 * q / (-np.expm1(-2 * y) * ((a1 - a) + (a1 + a) * q))


def potential_V(x: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Complex SUSY partner 2 a1^2 (a^2 - a1^2) / [a1 cosh(a1 x) - a sinh(a1 x)]^2.

    Finite at the origin, where it equals 2 (a^2 - a1^2).
    """
    y = p.a1 * _non_negative(x, "potential_V")
    q = np.exp(-2 * y)
    a, a1 = p.a, p.a1
    return 8 * a1**2 * (a**2 - a1**2) * q / ((a1 - a) + (a1 + a) * q) ** 2


def soliton_form(x: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """V rewritten as a complex one-soliton well -2 a1^2 / cosh^2(a1 x - x0).

    The complex shift is x0 = artanh(a / a1); the two forms agree wherever a != +-a1.
    """
    xs = _non_negative(x, "soliton_form")
    x0 = np.arctanh(p.a / p.a1)
    return -2 * p.a1**2 / np.cosh(p.a1 * xs - x0) ** 2


def phi_at_alpha(x: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Solution 1/u of H phi = alpha phi; vanishes at the origin, grows like exp(-a x).

    Written as exp(-a x) tanh(a1 x) / (a1 - a tanh(a1 x)), which is regular down to x = 0.
    """
    xs = _non_negative(x, "phi_at_alpha")
    t = np.tanh(p.a1 * xs)
    return np.exp(-p.a * xs) * t / (p.a1 - p.a * t)


def assert_u_nonvanishing(grid: XGrid, p: ModelParams, floor: float = 1e-300) -> float:
    """Check that u has no zero on the grid and return min |u| e^{-d x}.

    The exp(-d x) factor removes the trivial exponential decay so the returned number
    measures proximity to a genuine zero.

    Raises:
        ConsistencyError: If u vanishes at a node
    """
    xs = grid.nodes
    xs = xs[xs > 0]
    scaled = np.abs(jost_u(xs, p)) * np.exp(-p.d * xs)
    smallest = float(scaled.min())
    if not smallest > floor:
        logger.error(f"Transformation function vanishes on the grid (min scaled |u| = {smallest})")
        raise ConsistencyError(f"u(x) vanishes on the grid for {p}; the partner potential would have a pole")
    return smallest


def scattering_state(k: float, grid: XGrid, p: ModelParams) -> WaveSolution:
    """Sample the closed-form background state psi0 and its derivative on ``grid``."""
    xs = grid.nodes
    return WaveSolution(
        k=k,
        grid=grid,
        values=psi0(k, xs, p).astype(complex),
        derivatives=psi0_derivative(k, xs, p).astype(complex),
        potential_tag=PotentialTag.V0,
    )


@dataclass(frozen=True)
class RadialPotential:
    """A radial potential as seen by the ODE oracle.

    Attributes:
        tag: Which equation this is
        func: Vectorised x -> potential value
        singularity_strength: nu in the nu(nu+1)/x^2 behaviour at the origin
        origin_value: Regular part of the potential at x = 0 (seeds the origin series)
    """

    tag: PotentialTag
    func: Callable[[NDArray], NDArray]
    singularity_strength: int
    origin_value: complex

    @property
    def origin_order(self) -> int:
        """Power of the leading small-x behaviour of the regular solution."""
        return self.singularity_strength + 1

    def __call__(self, x: ArrayLike) -> NDArray:
        return self.func(np.asarray(x, dtype=float))


def background_potential(p: ModelParams) -> RadialPotential:
    return RadialPotential(
        tag=PotentialTag.V0,
        func=lambda x: v0(x, p),
        singularity_strength=1,
        origin_value=v0_regular_part_at_origin(p),
    )


def partner_potential(p: ModelParams, offset: complex = 0.0) -> RadialPotential:
    """The complex partner V, optionally shifted by a constant (used to corrupt it on purpose)."""
    return RadialPotential(
        tag=PotentialTag.V_COMPLEX,
        func=lambda x: potential_V(x, p) + offset,
        singularity_strength=0,
        origin_value=complex(potential_V(0.0, p)) + offset,
    )


def free_potential() -> RadialPotential:
    return RadialPotential(
        tag=PotentialTag.FREE,
        func=lambda x: np.zeros_like(x, dtype=float),
        singularity_strength=0,
        origin_value=0.0,
    )
