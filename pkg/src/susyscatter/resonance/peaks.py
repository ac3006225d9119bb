"""Peak detection, Breit-Wigner parameter extraction and the no-resonance criterion."""

from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, Field
from scipy.signal import argrelextrema

from susyscatter.core.params import KGrid, ModelParams, RealCurve
from susyscatter.errors import HalfMaximumWindowError, NoInteriorPeakError, ParameterError
from susyscatter.smatrix.cross_sections import cross_sections

MIN_PEAK_SAMPLES = 50
MIN_WINDOW_SAMPLES = 10
PROMINENCE_FACTOR = 1.05
NO_RESONANCE_WINDOW = (0.3, 1.5)


@dataclass(frozen=True)
class ResonanceFit:
    """Peak statistics of a cross-section curve, read as a Breit-Wigner line.

    Attributes:
        k_peak: Refined peak momentum
        sigma_peak: Refined peak height
        E_peak: k_peak^2
        half_width_E: Full width at half maximum in energy
        E0_implied: Resonance energy, E_peak
        Gamma_implied: Width, equal to the FWHM (reported as a positive number)
    """

    k_peak: float
    sigma_peak: float
    E_peak: float
    half_width_E: float
    E0_implied: float
    Gamma_implied: float

    def as_row(self) -> dict[str, float]:
        return {
            "k_peak": self.k_peak,
            "sigma_peak": self.sigma_peak,
            "E_peak": self.E_peak,
            "half_width_E": self.half_width_E,
            "E0_implied": self.E0_implied,
            "Gamma_implied": self.Gamma_implied,
        }


def _parabolic_vertex(x: NDArray, y: NDArray) -> tuple[float, float]:
    """Vertex of the parabola through three points with arbitrary spacing."""
    centre = float(x[1])
    (x0, x1, x2), (y0, y1, y2) = np.asarray(x, dtype=float) - centre, y
    denom = (x0 - x1) * (x0 - x2) * (x1 - x2)
    a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom
    b = (x2**2 * (y0 - y1) + x1**2 * (y2 - y0) + x0**2 * (y1 - y2)) / denom
    c = (x1 * x2 * (x1 - x2) * y0 + x2 * x0 * (x2 - x0) * y1 + x0 * x1 * (x0 - x1) * y2) / denom
    if a >= 0:
        return centre, float(y1)
    vertex = -b / (2 * a)
    return float(centre + vertex), float(c - b**2 / (4 * a))


def find_peak(curve: RealCurve) -> tuple[float, float]:
    """Refined location and height of the curve's global maximum.

    Args:
        curve: At least 50 samples

    Returns:
        (k_peak, sigma_peak) from a parabola through the argmax and its neighbours

    Raises:
        ParameterError: If the curve has fewer than 50 samples
        NoInteriorPeakError: If the maximum sits on the first or last sample
    """
    if len(curve.k) < MIN_PEAK_SAMPLES:
        raise ParameterError(f"find_peak needs at least {MIN_PEAK_SAMPLES} samples, got {len(curve.k)}")

    top = int(np.argmax(curve.values))
    if top in (0, len(curve.k) - 1):
        raise NoInteriorPeakError(f"maximum of {curve.label or 'curve'} lies on the grid boundary at k = {curve.k[top]:.6g}")

    window = slice(top - 1, top + 2)
    return _parabolic_vertex(curve.k[window], curve.values[window])


def _half_crossing(energies: NDArray, values: NDArray, start: int, step: int, half: float) -> float | None:
    """Energy where the curve first drops to ``half`` walking from ``start`` in direction ``step``."""
    i = start
    while 0 <= i + step < len(values):
        if values[i + step] <= half:
            lo, hi = values[i + step], values[i]
            fraction = (hi - half) / (hi - lo)
            return float(energies[i] + fraction * (energies[i + step] - energies[i]))
        i += step
    return None


def half_maximum_crossings(curve: RealCurve, sigma_peak: float, top: int) -> tuple[float | None, float | None]:
    """Low- and high-energy half-maximum crossings, ``None`` where not bracketed."""
    energies = curve.energies
    half = 0.5 * sigma_peak
    return (
        _half_crossing(energies, curve.values, top, -1, half),
        _half_crossing(energies, curve.values, top, +1, half),
    )


def fit_breit_wigner(curve: RealCurve) -> ResonanceFit:
    """Read E0 and Gamma off a resonance peak without a nonlinear fit.

    E0 is the refined peak energy and Gamma the full width at half maximum in energy,
    with both crossings located by linear interpolation.

    Raises:
        NoInteriorPeakError: If the curve has no interior maximum
        HalfMaximumWindowError: If a crossing is not bracketed or the window holds
            fewer than 10 samples
    """
    k_peak, sigma_peak = find_peak(curve)
    top = int(np.argmax(curve.values))
    low, high = half_maximum_crossings(curve, sigma_peak, top)
    if low is None or high is None:
        side = "low" if low is None else "high"
        raise HalfMaximumWindowError(f"{side}-energy half maximum of {curve.label or 'curve'} is not bracketed by the grid")

    energies = curve.energies
    inside = int(np.count_nonzero((energies >= low) & (energies <= high)))
    if inside < MIN_WINDOW_SAMPLES:
        raise HalfMaximumWindowError(f"only {inside} samples inside the half-maximum window; refine the k-grid")

    width = high - low
    E_peak = k_peak**2
    logger.debug(f"Breit-Wigner read-off for {curve.label}: E0={E_peak:.6g}, Gamma={width:.6g}")
    return ResonanceFit(
        k_peak=k_peak,
        sigma_peak=sigma_peak,
        E_peak=E_peak,
        half_width_E=width,
        E0_implied=E_peak,
        Gamma_implied=abs(width),
    )


class PeakCheck(BaseModel):
    """Result of the no-resonance criterion on one curve."""

    curve: str = Field(..., description="Curve name")
    prominence: float = Field(..., description="Largest peak / larger neighbouring minimum ratio, 0 when no peak")
    threshold: float = Field(PROMINENCE_FACTOR, description="Ratio above which a peak counts as a resonance")
    passed: bool = Field(..., description="True when the curve shows no resonance")


def peak_prominence(values: NDArray) -> float:
    """Largest ratio of an interior local maximum to the larger of its neighbouring minima.

    A side without an interior minimum uses the window's endpoint value.
    Returns 0 for curves without interior maxima.
    """
    values = np.asarray(values, dtype=float)
    maxima = argrelextrema(values, np.greater)[0]
    if maxima.size == 0:
        return 0.0
    minima = argrelextrema(values, np.less)[0]

    worst = 0.0
    for m in maxima:
        left = minima[minima < m]
        right = minima[minima > m]
        left_value = values[left[-1]] if left.size else values[0]
        right_value = values[right[0]] if right.size else values[-1]
        floor = max(left_value, right_value)
        ratio = values[m] / floor if floor > 0 else np.inf
        worst = max(worst, float(ratio))
    return worst


def check_no_peak(curve: RealCurve, window: tuple[float, float] = NO_RESONANCE_WINDOW) -> PeakCheck:
    mask = (curve.k >= window[0]) & (curve.k <= window[1])
    prominence = peak_prominence(curve.values[mask])
    return PeakCheck(curve=curve.label, prominence=prominence, passed=prominence <= PROMINENCE_FACTOR)


def no_resonance_check(p: ModelParams, kgrid: KGrid) -> list[PeakCheck]:
    """Apply the prominence criterion to sigma_e, sigma_r, sigma_t, sigma0 and sigma_h.

    sigma_h is included as the criterion's self-test: it is resonant and is expected
    to fail.
    """
    xs = cross_sections(kgrid, p)
    checks = [
        check_no_peak(RealCurve(k=xs.k, values=getattr(xs, name), label=name))
        for name in ("sigma_e", "sigma_r", "sigma_t", "sigma0", "sigma_h")
    ]
    for check in checks:
        logger.info(f"{'✅ no resonance' if check.passed else '📈 resonant'} in {check.curve} (prominence {check.prominence:.3f})")
    return checks
