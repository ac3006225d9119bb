"""Phase shifts of unimodular S-matrices.

delta = (1/2i) log S, unwrapped along the grid with ``np.unwrap`` and shifted by a
multiple of pi so that the value at the highest momentum lies in (-pi/2, pi/2], where
every phase of this model tends to a constant.
"""

import numpy as np
from loguru import logger

from susyscatter.core.params import ComplexCurve, RealCurve
from susyscatter.errors import DomainError, GridTooCoarseError

UNIMODULAR_TOLERANCE = 1e-9
# Largest accepted change of arg S between neighbouring samples
MAX_ARG_STEP = np.pi / 2


def phase_shift(curve: ComplexCurve, tolerance: float = UNIMODULAR_TOLERANCE) -> RealCurve:
    """Continuous phase shift of a unimodular S-matrix curve.

    Args:
        curve: Samples of S(k) on an ascending grid
        tolerance: Accepted deviation of |S| from 1

    Returns:
        RealCurve of delta(k), anchored at k_max

    Raises:
        DomainError: If any |S(k)| differs from 1 by more than ``tolerance``
        GridTooCoarseError: If arg S changes by more than pi/2 between neighbours
    """
    S = np.asarray(curve.values, dtype=complex)
    deviation = np.abs(np.abs(S) - 1)
    if np.any(deviation > tolerance):
        worst = int(np.argmax(deviation))
        raise DomainError(
            f"phase_shift needs a unimodular S-matrix; |S| - 1 = {deviation[worst]:.3e} at k = {curve.k[worst]:.6g} ({curve.label})"
        )

    arg = np.unwrap(np.angle(S))
    steps = np.abs(np.diff(arg))
    if steps.size and steps.max() > MAX_ARG_STEP:
        worst = int(np.argmax(steps))
        logger.warning(f"Phase of {curve.label or 'S'} jumps by {steps[worst]:.3f} rad near k = {curve.k[worst]:.6g}")
        raise GridTooCoarseError(f"k-grid too coarse to follow the phase of {curve.label or 'S'} near k = {curve.k[worst]:.6g}")

    delta = 0.5 * arg
    shift = np.pi * np.floor((np.pi / 2 - delta[-1]) / np.pi)
    return RealCurve(k=curve.k, values=delta + shift, label=f"delta[{curve.label}]" if curve.label else "delta")


def phase_derivative(delta: RealCurve, at_k: float, *, energy: bool = False) -> float:
    """Slope of a phase curve at ``at_k`` by central differences, in k or in E = k^2.

    Raises:
        DomainError: If ``at_k`` lies outside the curve's grid
    """
    if not delta.k[0] <= at_k <= delta.k[-1]:
        raise DomainError(f"k = {at_k} lies outside the phase grid [{delta.k[0]}, {delta.k[-1]}]")
    abscissa = delta.k**2 if energy else delta.k
    slope = np.gradient(delta.values, abscissa)
    return float(np.interp(at_k, delta.k, slope))
