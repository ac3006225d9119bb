"""Utility modules for susyscatter."""

from susyscatter.utils.logging import (
    configure_logging,
    is_development_mode,
    summarize_array,
    summarize_params,
)

__all__ = [
    "configure_logging",
    "is_development_mode",
    "summarize_array",
    "summarize_params",
]
