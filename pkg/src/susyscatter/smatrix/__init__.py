"""Closed-form k-space objects: S-matrices, phases, cross sections, effective range."""

from susyscatter.smatrix.analytic import (
    SMatrixFamily,
    abs_s_H,
    background_amplitudes,
    cross_section,
    effective_range_function,
    hermitian_amplitudes,
    metric_multiplier,
    partner_amplitudes,
    s0,
    s_BW,
    s_h,
    s_H,
    s_R,
    s_tilde,
    scattering_amplitude,
    smatrix_family,
)
from susyscatter.smatrix.cross_sections import (
    CrossSections,
    SingularLimitDiagnostics,
    cross_sections,
    sigma0_at_zero,
    sigma_R_at_zero,
    sigma_R_maximum,
    sigma_R_slope_at_zero,
    singular_limit_diagnostics,
)
from susyscatter.smatrix.effective_range import EffectiveRangeData, effective_range
from susyscatter.smatrix.phases import phase_derivative, phase_shift

__all__ = [
    "CrossSections",
    "EffectiveRangeData",
    "SMatrixFamily",
    "SingularLimitDiagnostics",
    "abs_s_H",
    "background_amplitudes",
    "cross_section",
    "cross_sections",
    "effective_range",
    "effective_range_function",
    "hermitian_amplitudes",
    "metric_multiplier",
    "partner_amplitudes",
    "phase_derivative",
    "phase_shift",
    "s0",
    "s_BW",
    "s_H",
    "s_R",
    "s_h",
    "s_tilde",
    "scattering_amplitude",
    "sigma0_at_zero",
    "sigma_R_at_zero",
    "sigma_R_maximum",
    "sigma_R_slope_at_zero",
    "singular_limit_diagnostics",
    "smatrix_family",
]
