"""Physical parameters of the toy model and the sampled objects built from them.

Units are such that hbar^2/(2m) = 1, so energies are E = k^2 and every parameter is an
inverse length.
"""

import math
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from susyscatter.errors import ConsistencyError, ParameterError

# a1 * x_max must reach this for the exp(-2 a1 x) tails to drop below ~1e-16 of their peak
TAIL_DECAY_PRODUCT = 20.0


@dataclass(frozen=True)
class ModelParams:
    """Parameter set (a1, b, d) of the background potential and its complex partner.

    Attributes:
        a1: Stiffness of the background potential 2 a1^2 / sinh^2(a1 x), a1 > 0
        b: Real part of the would-be singular wavenumber, b != 0
        d: Imaginary shift, d < 0 (d = 0 only through :meth:`at_singularity`)
        singular: True only for the spectral-singularity diagnostics path
    """

    a1: float
    b: float
    d: float
    singular: bool = False

    def __post_init__(self) -> None:
        for name in ("a1", "b", "d"):
            value = getattr(self, name)
            if not isinstance(value, int | float) or not math.isfinite(value):
                raise ParameterError(f"{name} must be a finite real number, got {value!r}")

        if self.a1 <= 0:
            raise ParameterError(f"a1 must be positive, got {self.a1}")
        if self.b == 0:
            raise ParameterError("b must be non-zero (b = 0 puts alpha on the spectrum of h0)")

        if self.singular:
            if self.d != 0:
                raise ParameterError(f"singular parameter sets must have d = 0, got {self.d}")
        elif self.d >= 0:
            raise ParameterError(f"d must be strictly negative, got {self.d} (d = 0 is the spectral singularity)")

    @classmethod
    def at_singularity(cls, a1: float, b: float) -> "ModelParams":
        """Build the d = 0 parameter set used by the singular-limit diagnostics."""
        logger.debug(f"Building spectral-singularity parameters a1={a1}, b={b}")
        return cls(a1=a1, b=b, d=0.0, singular=True)

    @property
    def a(self) -> complex:
        """Complex wavenumber a = d + i b."""
        return complex(self.d, self.b)

    @property
    def alpha(self) -> complex:
        """Factorization constant alpha = -a^2."""
        return -(self.a**2)

    @property
    def resonance_energy(self) -> float:
        """Breit-Wigner centre E0 = b^2 - d^2."""
        return self.b**2 - self.d**2

    @property
    def resonance_width(self) -> float:
        """Breit-Wigner width |Gamma| = |4 b d|."""
        return abs(4 * self.b * self.d)

    def with_d(self, d: float) -> "ModelParams":
        """Copy of these parameters with another imaginary shift."""
        return ModelParams(a1=self.a1, b=self.b, d=d)

    def as_dict(self) -> dict[str, float]:
        return {"a1": self.a1, "b": self.b, "d": self.d}


@dataclass(frozen=True)
class XGrid:
    """Uniform radial grid.

    x_min may be 0 only for potentials that are finite at the origin; singular objects
    reject x <= 0 when evaluated.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self) -> None:
        if self.x_min < 0:
            raise ParameterError(f"x_min must be non-negative, got {self.x_min}")
        if self.x_max <= self.x_min:
            raise ParameterError(f"x_max ({self.x_max}) must exceed x_min ({self.x_min})")
        if self.n < 5:
            raise ParameterError(f"an x-grid needs at least 5 nodes, got {self.n}")

    @classmethod
    def for_model(cls, params: ModelParams, n: int, x_max: float | None = None, x_min: float | None = None) -> "XGrid":
        """Grid reaching far enough that both potentials have decayed.

        Args:
            params: Model parameters (a1 sets the decay length)
            n: Number of nodes
            x_max: Outer edge, default 25 / a1
            x_min: Inner edge, default 1e-3 / a1

        Raises:
            ParameterError: If a1 * x_max < 20
        """
        x_max = 25.0 / params.a1 if x_max is None else x_max
        x_min = 1e-3 / params.a1 if x_min is None else x_min
        if params.a1 * x_max < TAIL_DECAY_PRODUCT:
            raise ParameterError(f"x_max={x_max} too short: a1 * x_max must be at least {TAIL_DECAY_PRODUCT}")
        return cls(x_min=x_min, x_max=x_max, n=n)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n - 1)

    @property
    def nodes(self) -> NDArray[np.float64]:
        return np.linspace(self.x_min, self.x_max, self.n)


@dataclass(frozen=True)
class KGrid:
    """Strictly increasing momentum grid with k_min > 0.

    Attributes:
        k_min: Smallest momentum, strictly positive
        k_max: Largest momentum
        n: Number of samples
        log_spaced: Geometric instead of linear spacing
    """

    k_min: float
    k_max: float
    n: int
    log_spaced: bool = False

    def __post_init__(self) -> None:
        if self.k_min <= 0:
            raise ParameterError(f"k_min must be positive (cross sections carry 1/k^2), got {self.k_min}")
        if self.k_max <= self.k_min:
            raise ParameterError(f"k_max ({self.k_max}) must exceed k_min ({self.k_min})")
        if self.n < 2:
            raise ParameterError(f"a k-grid needs at least 2 samples, got {self.n}")

    @property
    def nodes(self) -> NDArray[np.float64]:
        if self.log_spaced:
            return np.geomspace(self.k_min, self.k_max, self.n)
        return np.linspace(self.k_min, self.k_max, self.n)


@dataclass(frozen=True)
class ComplexCurve:
    """A sampled map k -> complex value (S-matrices, amplitudes)."""

    k: NDArray[np.float64]
    values: NDArray[np.complex128]
    label: str = ""

    def __post_init__(self) -> None:
        _check_curve_shapes(self.k, self.values, self.label)


@dataclass(frozen=True)
class RealCurve:
    """A sampled map k -> real value (cross sections, phase shifts, |S|)."""

    k: NDArray[np.float64]
    values: NDArray[np.float64]
    label: str = ""

    def __post_init__(self) -> None:
        _check_curve_shapes(self.k, self.values, self.label)
        if np.iscomplexobj(self.values):
            raise ParameterError(f"RealCurve {self.label!r} received complex values")

    @property
    def energies(self) -> NDArray[np.float64]:
        return self.k**2


class PotentialTag(StrEnum):
    """Which radial equation a wavefunction solves."""

    FREE = "free"
    V0 = "v0"
    V_COMPLEX = "V_complex"


@dataclass(frozen=True)
class WaveSolution:
    """Radial wavefunction sampled on an x-grid with its first derivative.

    Attributes:
        k: Real wavenumber
        grid: Nodes the solution is sampled on
        values: psi at each node
        derivatives: psi' at each node
        potential_tag: Potential the solution belongs to
        log_scale: Natural log of the factor divided out during renormalisation
    """

    k: float
    grid: XGrid
    values: NDArray[np.complex128]
    derivatives: NDArray[np.complex128]
    potential_tag: PotentialTag
    log_scale: float = field(default=0.0)

    def __post_init__(self) -> None:
        if self.values.shape != (self.grid.n,) or self.derivatives.shape != (self.grid.n,):
            raise ParameterError(
                f"WaveSolution arrays must have shape ({self.grid.n},), got {self.values.shape} and {self.derivatives.shape}"
            )
        if not (np.all(np.isfinite(self.values)) and np.all(np.isfinite(self.derivatives))):
            raise ConsistencyError(f"WaveSolution at k={self.k} ({self.potential_tag}) contains non-finite samples")


def _check_curve_shapes(k: NDArray, values: NDArray, label: str) -> None:
    if np.shape(k) != np.shape(values):
        raise ParameterError(f"curve {label!r}: k has shape {np.shape(k)} but values have {np.shape(values)}")
    if np.ndim(k) != 1 or len(k) < 1:
        raise ParameterError(f"curve {label!r}: k must be a non-empty 1-D array")
    if len(k) > 1 and not np.all(np.diff(k) > 0):
        raise ParameterError(f"curve {label!r}: k must be strictly increasing")
