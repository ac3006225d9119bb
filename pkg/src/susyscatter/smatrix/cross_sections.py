"""Cross sections of the background, the complex partner and its Hermitian counterpart."""

from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import minimize_scalar

from susyscatter.core.params import KGrid, ModelParams
from susyscatter.errors import ConsistencyError, NoInteriorPeakError, SingularLimitError
from susyscatter.smatrix.analytic import _momenta, abs_s_H, cross_section, s_h, s_H, s_R
from susyscatter.utils.logging import summarize_array

CROSS_CHECK_RTOL = 1e-10
# bracket form is compared only where k^2 d^2 >= BRACKET_FORM_FLOOR (b^2 + d^2)^2
BRACKET_FORM_FLOOR = 1e-4


@dataclass(frozen=True)
class CrossSections:
    """Every cross section of the model on one k-grid."""

    k: NDArray[np.float64]
    sigma0: NDArray[np.float64]
    sigma_e: NDArray[np.float64]
    sigma_r: NDArray[np.float64]
    sigma_t: NDArray[np.float64]
    sigma_h: NDArray[np.float64]
    sigmaR: NDArray[np.float64]
    sigmaBW: NDArray[np.float64]

    @property
    def energies(self) -> NDArray[np.float64]:
        return self.k**2

    def columns(self) -> dict[str, NDArray[np.float64]]:
        """Named columns in table order."""
        return {
            "k": self.k,
            "E": self.energies,
            "sigma0": self.sigma0,
            "sigma_e": self.sigma_e,
            "sigma_r": self.sigma_r,
            "sigma_t": self.sigma_t,
            "sigma_h": self.sigma_h,
            "sigmaR": self.sigmaR,
            "sigmaBW": self.sigmaBW,
        }


def sigma_background(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """sigma0 = 4 pi / (k^2 + a1^2)."""
    ks = _momenta(k)
    return 4 * np.pi / (ks**2 + p.a1**2)


def sigma_breit_wigner(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Lorentzian 16 pi d^2 / ((k^2 + d^2 - b^2)^2 + 4 b^2 d^2)."""
    ks = _momenta(k)
    return 16 * np.pi * p.d**2 / ((ks**2 + p.d**2 - p.b**2) ** 2 + 4 * p.b**2 * p.d**2)


def sigma_root(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Cross section of S_R without cancellation: 8 pi d^2 / (R (R - X)).

    R = sqrt((k^2 + d^2 - b^2)^2 + 4 b^2 d^2) and X = k^2 - b^2 - d^2, so R - X > 0 for
    every d != 0.
    """
    ks = _momenta(k)
    radical = np.sqrt((ks**2 + p.d**2 - p.b**2) ** 2 + 4 * p.b**2 * p.d**2)
    shifted = ks**2 - p.b**2 - p.d**2
    return 8 * np.pi * p.d**2 / (radical * (radical - shifted))


def sigma_root_bracket_form(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """The same cross section in its bracket form (2 pi / k^2) [1 + X / R].

    1 + X / R cancels as k -> 0: the relative error grows like (b^2 + d^2)^2 / (k^2 d^2)
    machine epsilons, so it is only trusted where that stays small.
    """
    ks = _momenta(k)
    radical = np.sqrt((ks**2 + p.d**2 - p.b**2) ** 2 + 4 * p.b**2 * p.d**2)
    return 2 * np.pi / ks**2 * (1 + (ks**2 - p.b**2 - p.d**2) / radical)


def cross_sections(kgrid: KGrid, p: ModelParams) -> CrossSections:
    """Evaluate all seven cross sections on ``kgrid``.

    sigma_R is computed in closed form and cross-checked node by node against
    (pi/k^2)|S_R - 1|^2, and against the bracket form wherever that form is accurate.

    Raises:
        SingularLimitError: If d = 0 (use :func:`singular_limit_diagnostics`)
        ConsistencyError: If the two sigma_R evaluations disagree beyond 1e-10 relative
    """
    logger.debug(f">>> cross_sections() called for {p.as_dict()} on {kgrid.n} momenta")
    if p.singular:
        raise SingularLimitError("cross_sections needs d < 0; use singular_limit_diagnostics at d = 0")

    ks = kgrid.nodes
    SH = s_H(ks, p)
    sigma_e = cross_section(SH, ks)
    # 1 - |S_H|^2 = 4 b k / ((b + k)^2 + d^2)
    sigma_r = np.pi / ks**2 * (4 * p.b * ks / ((p.b + ks) ** 2 + p.d**2))
    if p.b < 0:
        logger.warning(f"b = {p.b} < 0: |S_H| > 1 and the reaction cross section is negative (emission)")

    sigmaR = sigma_root(ks, p)
    reference = cross_section(s_R(ks, p), ks)
    mismatch = np.abs(sigmaR - reference) / np.abs(reference)
    if np.any(mismatch > CROSS_CHECK_RTOL):
        worst = int(np.argmax(mismatch))
        raise ConsistencyError(
            f"sigma_R closed form disagrees with (pi/k^2)|S_R - 1|^2 by {mismatch[worst]:.3e} at k = {ks[worst]:.6g}"
        )

    trusted = ks**2 * p.d**2 >= BRACKET_FORM_FLOOR * (p.b**2 + p.d**2) ** 2
    bracket = sigma_root_bracket_form(ks[trusted], p)
    bracket_mismatch = np.abs(sigmaR[trusted] - bracket) / np.abs(bracket)
    if bracket_mismatch.size and np.max(bracket_mismatch) > CROSS_CHECK_RTOL:
        worst = int(np.argmax(bracket_mismatch))
        raise ConsistencyError(
            f"sigma_R closed form disagrees with its bracket form by {bracket_mismatch[worst]:.3e} at k = {ks[trusted][worst]:.6g}"
        )

    result = CrossSections(
        k=ks,
        sigma0=sigma_background(ks, p),
        sigma_e=sigma_e,
        sigma_r=sigma_r,
        sigma_t=sigma_e + sigma_r,
        sigma_h=cross_section(s_h(ks, p), ks),
        sigmaR=sigmaR,
        sigmaBW=sigma_breit_wigner(ks, p),
    )
    logger.debug(summarize_array(result.sigma_h, "sigma_h"))
    logger.debug("<<< cross_sections() FINISHED (success)")
    return result


def sigma_R_at_zero(p: ModelParams) -> float:
    """k -> 0+ limit 4 pi d^2 / (b^2 + d^2)^2."""
    return 4 * np.pi * p.d**2 / (p.b**2 + p.d**2) ** 2


def sigma0_at_zero(p: ModelParams) -> float:
    """k -> 0+ limit 4 pi / a1^2."""
    return 4 * np.pi / p.a1**2


def sigma_R_slope_at_zero(p: ModelParams) -> float:
    """d sigma_R / dE at E = 0, equal to 4 pi d^2 (2 b^2 - d^2) / (b^2 + d^2)^4.

    sigma_R depends on k only through E = k^2, so the slope in k vanishes at the origin
    and has the sign of this value for small k > 0. It is positive iff b^2 > d^2 / 2.
    """
    return 4 * np.pi * p.d**2 * (2 * p.b**2 - p.d**2) / (p.b**2 + p.d**2) ** 4


def sigma_R_maximum(p: ModelParams, n_scan: int = 2001) -> tuple[float, float]:
    """Location and height of the maximum of sigma_R over k > 0.

    A coarse scan over (0, 4(|b| + |d|)] brackets the peak, then a bounded scalar
    minimisation refines it.

    Returns:
        (k_peak, sigma_peak)

    Raises:
        NoInteriorPeakError: If sigma_R is largest at the edge of the scan
    """
    k_hi = 4 * (abs(p.b) + abs(p.d))
    ks = np.linspace(k_hi / n_scan, k_hi, n_scan)
    values = sigma_root(ks, p)
    top = int(np.argmax(values))
    if top in (0, n_scan - 1):
        raise NoInteriorPeakError(f"sigma_R has no interior maximum for {p.as_dict()} (largest at k = {ks[top]:.6g})")

    outcome = minimize_scalar(
        lambda k: -float(sigma_root(k, p)),
        bounds=(ks[top - 1], ks[top + 1]),
        method="bounded",
        options={"xatol": 1e-12},
    )
    k_peak = float(outcome.x)
    return k_peak, float(sigma_root(k_peak, p))


@dataclass(frozen=True)
class SingularLimitDiagnostics:
    """|S_H| and the cross sections of H at the spectral singularity d = 0."""

    k: NDArray[np.float64]
    abs_SH: NDArray[np.float64]
    sigma_e: NDArray[np.float64]
    sigma_r: NDArray[np.float64]
    sigma_t: NDArray[np.float64]


def singular_limit_diagnostics(kgrid: KGrid, b: float, a1: float) -> SingularLimitDiagnostics:
    """Evaluate the non-Hermitian side at d = 0 without touching S_R or S_h.

    |S_H| vanishes at k = b there; no Hermitian counterpart exists.
    """
    p = ModelParams.at_singularity(a1=a1, b=b)
    ks = kgrid.nodes
    SH = s_H(ks, p)
    sigma_e = cross_section(SH, ks)
    sigma_r = np.pi / ks**2 * (1 - np.abs(SH) ** 2)
    logger.info(f"Spectral singularity diagnostics: min |S_H| = {abs_s_H(ks, p).min():.3e} near k = b = {b}")
    return SingularLimitDiagnostics(k=ks, abs_SH=abs_s_H(ks, p), sigma_e=sigma_e, sigma_r=sigma_r, sigma_t=sigma_e + sigma_r)
