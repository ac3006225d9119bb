"""Effective-range functions of the Breit-Wigner and root matrices.

g_R = g_BW + Delta, where the interference term Delta = 1/|f_BW| is what turns the
Lorentzian into sigma_R.
"""

from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from susyscatter.core.params import KGrid, ModelParams
from susyscatter.errors import ConsistencyError, DomainError
from susyscatter.smatrix.analytic import effective_range_function, s_R

# Below this |S - 1| the ratio ik(S+1)/(S-1) is dominated by rounding
VALIDITY_FLOOR = 1e-3
CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class EffectiveRangeData:
    """Effective-range quantities per k.

    Attributes:
        k: Momenta
        gBW: (k^2 - b^2 - d^2) / (2d)
        Delta: Interference term, positive for d < 0
        gR: gBW + Delta
        fBW: Breit-Wigner amplitude
        fR: Amplitude of S_R
        valid: False where |S_R - 1| < 1e-3
    """

    k: NDArray[np.float64]
    gBW: NDArray[np.float64]
    Delta: NDArray[np.float64]
    gR: NDArray[np.float64]
    fBW: NDArray[np.complex128]
    fR: NDArray[np.complex128]
    valid: NDArray[np.bool_]


def effective_range(kgrid: KGrid, p: ModelParams) -> EffectiveRangeData:
    """Closed-form effective-range data, checked against Re(1/f_R).

    Raises:
        DomainError: If d >= 0
        ConsistencyError: If g_R and Re(1/f_R) disagree
    """
    if p.singular or p.d >= 0:
        raise DomainError(f"effective_range needs d < 0, got d = {p.d}")

    ks = kgrid.nodes
    gBW = (ks**2 - p.b**2 - p.d**2) / (2 * p.d)
    Delta = np.sqrt((ks**2 + p.d**2 - p.b**2) ** 2 + 4 * p.b**2 * p.d**2) / (-2 * p.d)
    gR = gBW + Delta

    inv_fBW = (p.b**2 + (p.d + 1j * ks) ** 2) / (-2 * p.d)
    inv_fR = inv_fBW + Delta

    mismatch = np.abs(gR - inv_fR.real) / np.maximum(1.0, np.abs(gR))
    if np.any(mismatch > CONSISTENCY_RTOL):
        worst = int(np.argmax(mismatch))
        raise ConsistencyError(f"g_R and Re(1/f_R) disagree by {mismatch[worst]:.3e} at k = {ks[worst]:.6g}")

    SR = s_R(ks, p)
    valid = np.abs(SR - 1) >= VALIDITY_FLOOR
    if not np.all(valid):
        logger.debug(f"{int((~valid).sum())} of {ks.size} effective-range samples flagged invalid (|S_R - 1| < {VALIDITY_FLOOR})")

    return EffectiveRangeData(k=ks, gBW=gBW, Delta=Delta, gR=gR, fBW=1 / inv_fBW, fR=1 / inv_fR, valid=valid)


def effective_range_residual(data: EffectiveRangeData, p: ModelParams) -> NDArray[np.float64]:
    """|g_R - ik (S_R + 1)/(S_R - 1)| at the valid samples."""
    ks = data.k[data.valid]
    return np.abs(data.gR[data.valid] - effective_range_function(s_R(ks, p), ks))
