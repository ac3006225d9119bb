"""Resonance phenomenology: peaks, Breit-Wigner read-off and singularity sweeps."""

from susyscatter.resonance.peaks import (
    PeakCheck,
    ResonanceFit,
    check_no_peak,
    find_peak,
    fit_breit_wigner,
    no_resonance_check,
    peak_prominence,
)
from susyscatter.resonance.sweep import SWEEP_COLUMNS, SweepRow, singularity_sweep

__all__ = [
    "SWEEP_COLUMNS",
    "PeakCheck",
    "ResonanceFit",
    "SweepRow",
    "check_no_peak",
    "find_peak",
    "fit_breit_wigner",
    "no_resonance_check",
    "peak_prominence",
    "singularity_sweep",
]
