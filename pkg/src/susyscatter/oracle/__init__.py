"""Independent ODE oracle for the closed-form scattering results."""

from susyscatter.oracle.identities import CheckItem, verify_identities
from susyscatter.oracle.integrators import IntegrationMethod, IntegratorSpec, integrate
from susyscatter.oracle.matching import AmplitudePair, extract_amplitudes, numeric_smatrix
from susyscatter.oracle.suite import VerificationReport, run_suite, stability_scan

__all__ = [
    "AmplitudePair",
    "CheckItem",
    "IntegrationMethod",
    "IntegratorSpec",
    "VerificationReport",
    "extract_amplitudes",
    "integrate",
    "numeric_smatrix",
    "run_suite",
    "stability_scan",
    "verify_identities",
]
