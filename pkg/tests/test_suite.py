"""Tests for the verification suite.

The oracle runs integrate the radial equation at twenty momenta for two potentials and
are marked ``slow``.
"""

import json

import pytest

from susyscatter.core.params import ModelParams
from susyscatter.errors import MatchingWindowError
from susyscatter.oracle.suite import (
    ORACLE_MOMENTA,
    VerificationReport,
    closed_form_checks,
    darboux_amplitude_residual,
    oracle_checks,
    run_suite,
    stability_scan,
)
from tests.fixtures.reference_values import A1, B, D, ORACLE_MOMENTA_COUNT


@pytest.fixture
def toy_params() -> ModelParams:
    """Provide the a1 = 3, b = 0.5, d = -0.1 parameter set."""
    return ModelParams(a1=A1, b=B, d=D)


class TestClosedFormChecks:
    """Test the k-space identity items."""

    def test_all_pass(self, toy_params):
        """Every closed-form identity holds to 1e-10 on the 2000-point grid."""
        items = closed_form_checks(toy_params)
        assert len(items) == 10
        assert all(item.passed for item in items), [item.name for item in items if not item.passed]

    def test_other_shift(self):
        """The identities do not depend on the toy d."""
        assert all(item.passed for item in closed_form_checks(ModelParams(a1=3.0, b=0.5, d=-1.0)))


class TestOracle:
    """Test the numeric S-matrix checks."""

    def test_momenta(self):
        """Twenty log-spaced momenta on [0.05, 10]."""
        assert len(ORACLE_MOMENTA) == ORACLE_MOMENTA_COUNT
        assert ORACLE_MOMENTA[0] == pytest.approx(0.05)
        assert ORACLE_MOMENTA[-1] == pytest.approx(10.0)

    def test_darboux_amplitudes(self, toy_params):
        """The amplitudes of L psi0 are A0 (a - ik) and B0 (a + ik)."""
        assert darboux_amplitude_residual(toy_params, 1.0) < 1e-5

    @pytest.mark.slow
    def test_oracle_equivalence(self, toy_params):
        """Numeric S-matrices reproduce S0 and S_H with every convergence check passing."""
        items = oracle_checks(toy_params)
        names = [item.name for item in items]
        assert names == [
            "s0_oracle",
            "flux_v0",
            "sH_oracle",
            "absorption_V",
            "abs_sH_at_b",
            "step_halving",
            "rk4_backend",
            "seed_scale_invariance",
            "darboux_amplitudes",
        ]
        assert all(item.passed for item in items), [item for item in items if not item.passed]

    @pytest.mark.slow
    def test_coarse_step_breaks_matching(self, toy_params):
        """A 60-node radial grid cannot follow the k = 10 wave."""
        with pytest.raises(MatchingWindowError):
            oracle_checks(toy_params, n_x=60)


class TestRunSuite:
    """Test the assembled report."""

    @pytest.mark.slow
    def test_toy_parameters_pass(self, toy_params):
        """All items pass and the report serialises to JSON."""
        report = run_suite(toy_params)
        assert report.passed
        assert report.failures == []
        payload = json.loads(report.model_dump_json())
        assert payload["params"] == {"a1": 3.0, "b": 0.5, "d": -0.1}
        assert {"name", "residual", "tolerance", "passed"} <= set(payload["items"][0])

    @pytest.mark.slow
    def test_corrupted_partner_fails(self, toy_params):
        """A shifted V shows up as a failed intertwining item."""
        report = run_suite(toy_params, partner_offset=0.01)
        assert not report.passed
        assert [item.name for item in report.failures] == ["intertwining"]

    def test_report_round_trip(self):
        """Reports are pydantic models that validate their own JSON."""
        report = VerificationReport(params={"a1": 3.0, "b": 0.5, "d": -0.1})
        assert report.passed
        assert VerificationReport.model_validate_json(report.model_dump_json()) == report


class TestStabilityScan:
    """Test the near-singular record."""

    @pytest.mark.slow
    def test_records_each_d(self):
        """One row per d; deviations are recorded, not asserted."""
        rows = stability_scan(a1=3.0, b=0.5, ds=[-0.1, -1e-3, -1e-6])
        assert [row["d"] for row in rows] == [-0.1, -1e-3, -1e-6]
        assert rows[0]["deviation"] < 1e-5
