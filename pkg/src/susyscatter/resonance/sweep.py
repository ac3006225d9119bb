"""Sweeps in d towards the spectral singularity d = 0."""

from dataclasses import asdict, dataclass

import numpy as np
from loguru import logger

from susyscatter.core.params import ComplexCurve, KGrid, ModelParams, RealCurve
from susyscatter.errors import NoInteriorPeakError, ParameterError
from susyscatter.resonance.peaks import find_peak, half_maximum_crossings
from susyscatter.smatrix.analytic import abs_s_H, cross_section, s_h
from susyscatter.smatrix.phases import phase_derivative, phase_shift

SWEEP_COLUMNS = ("d", "k_peak", "sigma_peak", "width", "sH_abs_at_b", "phase_slope_at_b", "resonant")


@dataclass(frozen=True)
class SweepRow:
    """sigma_h peak statistics and proximity measures for one d.

    Attributes:
        d: Imaginary shift, d < 0
        k_peak: Location of the sigma_h maximum
        sigma_peak: Height of the sigma_h maximum
        width: Full width at half maximum of sigma_h in energy, 0 when not resonant
        sH_abs_at_b: |S_H(b)| = |d| / sqrt(4 b^2 + d^2)
        phase_slope_at_b: d delta_h / dk at k = b
        resonant: False when the maximum sits on the grid boundary
    """

    d: float
    k_peak: float
    sigma_peak: float
    width: float
    sH_abs_at_b: float
    phase_slope_at_b: float
    resonant: bool

    def as_row(self) -> dict[str, float | bool]:
        return asdict(self)


def _sigma_h_width(curve: RealCurve, k_peak: float, sigma_peak: float) -> float:
    top = int(np.argmax(curve.values))
    low, high = half_maximum_crossings(curve, sigma_peak, top)
    E_peak = k_peak**2
    if low is not None and high is not None:
        return high - low
    if high is not None:
        logger.debug(f"Only the high-energy half maximum is bracketed for {curve.label}; doubling the half width")
        return 2 * (high - E_peak)
    if low is not None:
        return 2 * (E_peak - low)
    logger.warning(f"No half-maximum crossing of {curve.label} on the grid; width reported as 0")
    return 0.0


def sweep_row(p: ModelParams, kgrid: KGrid) -> SweepRow:
    ks = kgrid.nodes
    Sh = s_h(ks, p)
    sigma = RealCurve(k=ks, values=cross_section(Sh, ks), label=f"sigma_h(d={p.d:g})")

    try:
        k_peak, sigma_peak = find_peak(sigma)
        width = _sigma_h_width(sigma, k_peak, sigma_peak)
        resonant = True
    except NoInteriorPeakError:
        top = int(np.argmax(sigma.values))
        k_peak, sigma_peak, width, resonant = float(ks[top]), float(sigma.values[top]), 0.0, False
        logger.info(f"d={p.d:g}: sigma_h maximum on the grid boundary (k={k_peak:.4g}); no resonance")

    delta_h = phase_shift(ComplexCurve(k=ks, values=Sh, label="Sh"))
    return SweepRow(
        d=p.d,
        k_peak=float(k_peak),
        sigma_peak=float(sigma_peak),
        width=float(width),
        sH_abs_at_b=float(abs_s_H(abs(p.b), p)),
        phase_slope_at_b=phase_derivative(delta_h, abs(p.b)),
        resonant=resonant,
    )


def singularity_sweep(d_values: list[float], p_base: ModelParams, kgrid: KGrid) -> list[SweepRow]:
    """One SweepRow per d, keeping a1 and b of ``p_base``.

    Raises:
        ParameterError: If ``d_values`` is empty or any d >= 0
    """
    if not d_values:
        raise ParameterError("singularity_sweep needs at least one d value")
    bad = [d for d in d_values if d >= 0]
    if bad:
        raise ParameterError(f"sweep values must satisfy d < 0, got {bad}")

    logger.debug(f">>> singularity_sweep() called for d in {list(d_values)}")
    rows = [sweep_row(p_base.with_d(d), kgrid) for d in d_values]
    logger.info(f"✅ Swept {len(rows)} values of d; {sum(row.resonant for row in rows)} resonant")
    return rows
