"""Closed-form scattering matrices of h0, H and h.

S0 is the background matrix of v0, S_H = S0 * Stilde the non-unitary matrix of the
complex partner H, and S_h = S0 * S_R the unitary matrix of its Hermitian counterpart
h. S_R is a square root of the Breit-Wigner matrix S_BW. Every square root of a
non-negative real quantity takes the non-negative branch.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from susyscatter.core.params import KGrid, ModelParams
from susyscatter.errors import DomainError, SingularLimitError


def _momenta(k: ArrayLike) -> NDArray[np.float64]:
    ks = np.asarray(k, dtype=float)
    if np.any(ks <= 0):
        raise DomainError(f"scattering quantities are evaluated at k > 0 only, got min k = {ks.min()}")
    return ks


def _require_regular(p: ModelParams, what: str) -> None:
    if p.singular or p.d >= 0:
        raise SingularLimitError(f"{what} does not exist at the spectral singularity d = 0 (no Hermitian counterpart)")


def s0(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Background matrix (a1 - ik) / (a1 + ik)."""
    ks = _momenta(k)
    return (p.a1 - 1j * ks) / (p.a1 + 1j * ks)


def s_tilde(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """SUSY factor (d + ib - ik) / (d + ib + ik)."""
    ks = _momenta(k)
    return (p.a - 1j * ks) / (p.a + 1j * ks)


def abs_s_H(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """|S_H| = sqrt(((b - k)^2 + d^2) / ((b + k)^2 + d^2))."""
    ks = _momenta(k)
    return np.sqrt(((p.b - ks) ** 2 + p.d**2) / ((p.b + ks) ** 2 + p.d**2))


def s_H(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Non-unitary matrix of the complex partner H, S0 * Stilde."""
    return s0(k, p) * s_tilde(k, p)


def s_R(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Unimodular square root of S_BW: Stilde * sqrt(((b+k)^2 + d^2) / ((b-k)^2 + d^2)).

    Raises:
        SingularLimitError: If d = 0
    """
    _require_regular(p, "S_R")
    ks = _momenta(k)
    return s_tilde(ks, p) * np.sqrt(((p.b + ks) ** 2 + p.d**2) / ((p.b - ks) ** 2 + p.d**2))


def s_h(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Unitary matrix of the Hermitian counterpart h, S0 * S_R.

    Raises:
        SingularLimitError: If d = 0
    """
    return s0(k, p) * s_R(k, p)


def s_BW(k: ArrayLike, p: ModelParams) -> NDArray[np.complex128]:
    """Breit-Wigner matrix (b^2 + (d - ik)^2) / (b^2 + (d + ik)^2)."""
    ks = _momenta(k)
    return (p.b**2 + (p.d - 1j * ks) ** 2) / (p.b**2 + (p.d + 1j * ks) ** 2)


def scattering_amplitude(S: ArrayLike, k: ArrayLike) -> NDArray[np.complex128]:
    """f = (S - 1) / (2ik)."""
    ks = _momenta(k)
    return (np.asarray(S, dtype=complex) - 1) / (2j * ks)


def effective_range_function(S: ArrayLike, k: ArrayLike) -> NDArray[np.complex128]:
    """g = ik (S + 1) / (S - 1); equals k cot(delta) for unimodular S."""
    ks = _momenta(k)
    S = np.asarray(S, dtype=complex)
    return 1j * ks * (S + 1) / (S - 1)


def cross_section(S: ArrayLike, k: ArrayLike) -> NDArray[np.float64]:
    """sigma = 4 pi |f|^2 = (pi / k^2) |S - 1|^2."""
    ks = _momenta(k)
    return np.pi / ks**2 * np.abs(np.asarray(S, dtype=complex) - 1) ** 2


def metric_eigenvalue(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Eigenvalue (k + b)^2 + d^2 of the asymptotic metric on exp(ikx)."""
    ks = np.asarray(k, dtype=float)
    return (ks + p.b) ** 2 + p.d**2


def metric_multiplier(k: ArrayLike, p: ModelParams) -> NDArray[np.float64]:
    """Action of the asymptotic metric root on exp(ikx): sqrt((k + b)^2 + d^2)."""
    return np.sqrt(metric_eigenvalue(k, p))


def background_amplitudes(k: ArrayLike, p: ModelParams) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """(A0, B0) of psi0 -> a1 sin(kx) - k cos(kx) = A0 e^{ikx} + B0 e^{-ikx}."""
    ks = _momenta(k)
    return (p.a1 - 1j * ks) / 2j, -(p.a1 + 1j * ks) / 2j


def partner_amplitudes(k: ArrayLike, p: ModelParams) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """(A_H, B_H) = (A0 (d + ib - ik), B0 (d + ib + ik)) for phi = L psi0."""
    ks = _momenta(k)
    a0, b0 = background_amplitudes(ks, p)
    return a0 * (p.a - 1j * ks), b0 * (p.a + 1j * ks)


def hermitian_amplitudes(k: ArrayLike, p: ModelParams) -> tuple[NDArray[np.complex128], NDArray[np.complex128]]:
    """(A_h, B_h) of the Hermitian counterpart's scattering state.

    A_h = A_H sqrt((k+b)^2 + d^2) / r and B_h = B_H sqrt((k-b)^2 + d^2) / r, where
    r = sqrt(a^2 + k^2) is the common factor that cancels in -A_h/B_h. With this branch
    A_h^2 = A0^2 (b^2 + (d - ik)^2), B_h^2 = B0^2 (b^2 + (d + ik)^2) and -A_h/B_h = S_h.

    Raises:
        SingularLimitError: If d = 0
    """
    _require_regular(p, "A_h, B_h")
    ks = _momenta(k)
    a_H, b_H = partner_amplitudes(ks, p)
    common = np.sqrt(p.a**2 + ks**2 + 0j)
    return (
        a_H * np.sqrt((ks + p.b) ** 2 + p.d**2) / common,
        b_H * np.sqrt((ks - p.b) ** 2 + p.d**2) / common,
    )


@dataclass(frozen=True)
class SMatrixFamily:
    """All scattering matrices of the model sampled on one k-grid."""

    k: NDArray[np.float64]
    S0: NDArray[np.complex128]
    Stilde: NDArray[np.complex128]
    SH: NDArray[np.complex128]
    SR: NDArray[np.complex128]
    Sh: NDArray[np.complex128]
    SBW: NDArray[np.complex128]


def smatrix_family(kgrid: KGrid, p: ModelParams) -> SMatrixFamily:
    ks = kgrid.nodes
    background = s0(ks, p)
    tilde = s_tilde(ks, p)
    root = s_R(ks, p)
    return SMatrixFamily(
        k=ks,
        S0=background,
        Stilde=tilde,
        SH=background * tilde,
        SR=root,
        Sh=background * root,
        SBW=s_BW(ks, p),
    )
