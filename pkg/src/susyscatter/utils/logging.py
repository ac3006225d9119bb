"""Logging utilities for numeric payloads.

This module keeps log output readable regardless of grid sizes:
- Development mode (LOG_LEVEL=DEBUG): logs full arrays and parameter mappings
- Normal mode (LOG_LEVEL=INFO or higher): logs only metadata (shape, dtype, range)

Usage:
    from susyscatter.utils.logging import summarize_array, configure_logging
    from loguru import logger

    configure_logging()
    logger.debug(summarize_array(sigma_h, "sigma_h"))
"""

import os
import sys
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} - {message}"


def is_development_mode() -> bool:
    """Check if we're running in development mode.

    Development mode is determined by LOG_LEVEL=DEBUG environment variable.

    Returns:
        bool: True if in development mode (DEBUG level), False otherwise
    """
    log_level = os.getenv("LOG_LEVEL", "INFO").upper()
    return log_level == "DEBUG"


def configure_logging(level: str | None = None, log_file: str | Path | None = None) -> None:
    """Install the console sink and, optionally, a rotating file sink.

    Args:
        level: Console level; defaults to LOG_LEVEL or INFO
        log_file: Path for a DEBUG file sink; defaults to $SUSYSCATTER_DATA_DIR/susyscatter.log
            when that variable is set, otherwise no file sink is added
    """
    logger.remove()

    console_level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    logger.add(sys.stderr, level=console_level, format=CONSOLE_FORMAT)

    if log_file is None and os.getenv("SUSYSCATTER_DATA_DIR"):
        log_file = Path(os.environ["SUSYSCATTER_DATA_DIR"]) / "susyscatter.log"

    if log_file is not None:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(log_path, level="DEBUG", format=FILE_FORMAT, rotation="10 MB", retention="7 days")
        logger.debug(f"File log sink at {log_path}")


def summarize_array(values: Any, label: str = "Array") -> str:
    """Format a numeric array for logging based on environment.

    In development mode the full array is returned. Otherwise only the shape, dtype,
    magnitude range and the number of non-finite entries are reported.

    Args:
        values: Array-like of real or complex numbers
        label: Human-readable label for the array

    Returns:
        str: Formatted log message

    Examples:
        >>> summarize_array([1.0, 2.0], "sigma")
        # Development: "sigma (full): [1. 2.]"
        # Normal: "sigma (shape=(2,), dtype=float64, |min|=1, |max|=2, nonfinite=0)"
    """
    if values is None:
        return f"{label}: None"

    array = np.asarray(values)

    if is_development_mode():
        return f"{label} (full): {array}"

    if array.size == 0:
        return f"{label} (shape={array.shape}, dtype={array.dtype}, empty)"

    magnitude = np.abs(array[np.isfinite(array)])
    nonfinite = int(array.size - magnitude.size)
    if magnitude.size == 0:
        return f"{label} (shape={array.shape}, dtype={array.dtype}, nonfinite={nonfinite})"

    return (
        f"{label} (shape={array.shape}, dtype={array.dtype}, "
        f"|min|={magnitude.min():.6g}, |max|={magnitude.max():.6g}, nonfinite={nonfinite})"
    )


def summarize_params(data: Mapping[str, Any] | None, label: str = "Params") -> str:
    """Format a parameter mapping for logging.

    Args:
        data: The mapping to log
        label: Human-readable label for the data

    Returns:
        str: Full mapping in development mode, keys only otherwise
    """
    if data is None:
        return f"{label}: None"

    if is_development_mode():
        return f"{label} (full): {dict(data)}"

    keys = list(data.keys())
    return f"{label} (keys={len(keys)}): {keys}"
