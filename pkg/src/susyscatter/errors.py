"""Exception hierarchy for susyscatter.

Every error raised by the library derives from :class:`ScatteringError`. Each class
carries the process exit code the command-line surface maps it to, so the CLI never
has to know which module raised what.
"""


class ScatteringError(Exception):
    """Base class for all susyscatter errors."""

    exit_code: int = 4


class ParameterError(ScatteringError, ValueError):
    """Raised when model parameters, grids or run configuration are invalid."""

    exit_code = 2


class DomainError(ParameterError):
    """Raised when an operation is evaluated outside its mathematical domain."""


class SingularLimitError(DomainError):
    """Raised when a quantity that needs d < 0 is requested at the spectral singularity."""


class PreconditionError(ScatteringError):
    """Raised when an input wavefunction does not solve the equation it claims to solve."""


class ConsistencyError(ScatteringError):
    """Raised when two evaluations of the same closed form disagree."""


class GridTooCoarseError(ScatteringError):
    """Raised when neighbouring phases differ by more than pi/2."""


class IntegrationError(ScatteringError):
    """Raised when ODE stepping produces non-finite values."""


class MatchingWindowError(ScatteringError):
    """Raised when asymptotic amplitude extractions at two radii disagree."""


class NoInteriorPeakError(ScatteringError):
    """Raised when a curve's maximum sits on the boundary of its grid."""


class HalfMaximumWindowError(ScatteringError):
    """Raised when the half maximum of a peak is not bracketed on both sides."""


class VerificationFailure(ScatteringError):
    """Raised when one or more oracle checks fail."""

    exit_code = 3


class OutputError(ScatteringError):
    """Raised when a result table cannot be written."""

    exit_code = 5


__all__ = [
    "ConsistencyError",
    "DomainError",
    "GridTooCoarseError",
    "HalfMaximumWindowError",
    "IntegrationError",
    "MatchingWindowError",
    "NoInteriorPeakError",
    "OutputError",
    "ParameterError",
    "PreconditionError",
    "ScatteringError",
    "SingularLimitError",
    "VerificationFailure",
]
