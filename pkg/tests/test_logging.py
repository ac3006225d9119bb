"""Tests for the logging helpers."""

import os
from unittest.mock import patch

import numpy as np
from loguru import logger

from susyscatter.utils.logging import configure_logging, is_development_mode, summarize_array, summarize_params


class TestDevelopmentMode:
    """Test LOG_LEVEL detection."""

    def test_debug_level(self):
        """LOG_LEVEL=debug turns development mode on regardless of case."""
        with patch.dict(os.environ, {"LOG_LEVEL": "debug"}):
            assert is_development_mode()

    def test_default_level(self):
        """Without LOG_LEVEL the mode is off."""
        with patch.dict(os.environ, {}, clear=True):
            assert not is_development_mode()


class TestSummaries:
    """Test array and mapping summaries."""

    def test_array_metadata(self):
        """Normal mode reports shape, range and non-finite count only."""
        with patch.dict(os.environ, {"LOG_LEVEL": "INFO"}):
            message = summarize_array(np.array([1.0, -4.0, np.nan]), "sigma")
        assert message == "sigma (shape=(3,), dtype=float64, |min|=1, |max|=4, nonfinite=1)"

    def test_array_full(self):
        """Development mode shows the values."""
        with patch.dict(os.environ, {"LOG_LEVEL": "DEBUG"}):
            assert summarize_array([1.0, 2.0], "sigma").startswith("sigma (full):")

    def test_array_edge_cases(self):
        """None, empty and all-NaN arrays are summarised without error."""
        with patch.dict(os.environ, {"LOG_LEVEL": "INFO"}):
            assert summarize_array(None, "x") == "x: None"
            assert "empty" in summarize_array(np.array([]), "x")
            assert "nonfinite=2" in summarize_array(np.array([np.nan, np.inf]), "x")

    def test_params(self):
        """Normal mode lists keys; development mode the whole mapping."""
        data = {"a1": 3.0, "b": 0.5}
        with patch.dict(os.environ, {"LOG_LEVEL": "INFO"}):
            assert summarize_params(data, "p") == "p (keys=2): ['a1', 'b']"
        with patch.dict(os.environ, {"LOG_LEVEL": "DEBUG"}):
            assert summarize_params(data, "p") == "p (full): {'a1': 3.0, 'b': 0.5}"
        assert summarize_params(None, "p") == "p: None"


class TestConfigureLogging:
    """Test sink installation."""

    def test_file_sink(self, tmp_path):
        """An explicit log file receives DEBUG messages."""
        log_file = tmp_path / "logs" / "run.log"
        configure_logging(level="WARNING", log_file=log_file)
        logger.debug("grid refined")
        logger.remove()
        assert "grid refined" in log_file.read_text()

    def test_data_dir_sink(self, tmp_path):
        """SUSYSCATTER_DATA_DIR places the log file there."""
        with patch.dict(os.environ, {"SUSYSCATTER_DATA_DIR": str(tmp_path)}):
            configure_logging(level="ERROR")
        logger.info("matched")
        logger.remove()
        assert "matched" in (tmp_path / "susyscatter.log").read_text()
