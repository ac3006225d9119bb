"""Subcommand implementations.

Each command takes a validated RunConfig, does its work through the library and writes
one table. Commands raise ScatteringError subclasses; exit codes are assigned in
``cli.main``.
"""

import numpy as np
from loguru import logger
from rich.console import Console
from rich.table import Table

from susyscatter.cli.config import RunConfig
from susyscatter.cli.tables import write_table, write_text
from susyscatter.core.params import ComplexCurve, RealCurve
from susyscatter.core.potentials import potential_V, superpotential_w, v0
from susyscatter.errors import ConsistencyError, ParameterError, VerificationFailure
from susyscatter.oracle.suite import VerificationReport, run_suite
from susyscatter.resonance.peaks import fit_breit_wigner
from susyscatter.resonance.sweep import SWEEP_COLUMNS, singularity_sweep
from susyscatter.smatrix.analytic import s0, s_BW, s_h, s_R
from susyscatter.smatrix.cross_sections import cross_sections
from susyscatter.smatrix.phases import phase_shift

# delta_BW - 2 delta_R must be a constant multiple of pi to this accuracy
HALF_PHASE_TOLERANCE = 1e-9

console = Console(stderr=True)


def cmd_curves(config: RunConfig) -> dict[str, np.ndarray]:
    """Cross sections of the figure regime: k, E and the seven sigma columns."""
    logger.debug(">>> cmd_curves() called")
    p = config.model_params()
    columns = cross_sections(config.kgrid(), p).columns()
    write_table(columns, config.output_path, config.format)
    logger.debug("<<< cmd_curves() FINISHED (success)")
    return columns


def _phase_columns(ks: np.ndarray, S: np.ndarray, label: str) -> np.ndarray:
    return phase_shift(ComplexCurve(k=ks, values=S, label=label)).values


def half_phase_defect(delta_BW: np.ndarray, delta_R: np.ndarray) -> float:
    """Largest deviation of delta_BW - 2 delta_R from its constant multiple of pi."""
    turns = (delta_BW - 2 * delta_R) / np.pi
    offset = np.round(turns[0])
    return float(np.max(np.abs(turns - offset)) * np.pi)


def cmd_phases(config: RunConfig) -> dict[str, np.ndarray]:
    """Unwrapped phase shifts delta0, deltaR, deltaBW, delta_h for every configured d.

    With one d the table has the five columns k, delta0, deltaR, deltaBW, delta_h.
    With several, the d-dependent columns carry a ``[d=...]`` suffix.

    Raises:
        ConsistencyError: If delta_BW - 2 delta_R drifts from a multiple of pi
    """
    logger.debug(f">>> cmd_phases() called for d in {config.d}")
    ks = config.kgrid().nodes
    base = config.model_params(config.d[0])
    columns: dict[str, np.ndarray] = {"k": ks, "delta0": _phase_columns(ks, s0(ks, base), "S0")}

    for d in config.d:
        p = config.model_params(d)
        suffix = "" if len(config.d) == 1 else f"[d={d:g}]"
        delta_R = _phase_columns(ks, s_R(ks, p), "SR")
        delta_BW = _phase_columns(ks, s_BW(ks, p), "SBW")
        defect = half_phase_defect(delta_BW, delta_R)
        if defect > HALF_PHASE_TOLERANCE:
            raise ConsistencyError(f"delta_BW - 2 delta_R is not a constant multiple of pi at d={d} (defect {defect:.3e})")
        columns[f"deltaR{suffix}"] = delta_R
        columns[f"deltaBW{suffix}"] = delta_BW
        columns[f"delta_h{suffix}"] = _phase_columns(ks, s_h(ks, p), "Sh")

    write_table(columns, config.output_path, config.format)
    logger.debug("<<< cmd_phases() FINISHED (success)")
    return columns


def cmd_potential(config: RunConfig) -> dict[str, np.ndarray]:
    """x, v0, Re V, Im V, Re w, Im w on a grid from the origin; v0 and w are NaN at x = 0."""
    logger.debug(">>> cmd_potential() called")
    p = config.model_params()
    xs = config.xgrid().nodes
    positive = xs > 0

    background = np.full(xs.shape, np.nan)
    background[positive] = v0(xs[positive], p)
    w = np.full(xs.shape, np.nan, dtype=complex)
    w[positive] = superpotential_w(xs[positive], p)
    V = potential_V(xs, p)

    columns = {"x": xs, "v0": background, "ReV": V.real, "ImV": V.imag, "Rew": w.real, "Imw": w.imag}
    logger.info(f"Integral of Im V over [0, {xs[-1]:.4g}]: {np.trapezoid(V.imag, xs):.6g}")
    write_table(columns, config.output_path, config.format)
    logger.debug("<<< cmd_potential() FINISHED (success)")
    return columns


def _render_report(report: VerificationReport) -> None:
    table = Table(title=f"Verification for {report.params}")
    table.add_column("check")
    table.add_column("residual", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("status")
    for item in report.items:
        table.add_row(item.name, f"{item.residual:.3e}", f"{item.tolerance:.1e}", "✅" if item.passed else "❌")
    console.print(table)


def cmd_verify(config: RunConfig) -> VerificationReport:
    """Run the verification suite, print its JSON report and fail on any failing item.

    Raises:
        VerificationFailure: If any check fails (after the report is written)
        MatchingWindowError: If the oracle step is too coarse for the matching window
    """
    logger.debug(">>> cmd_verify() called")
    p = config.model_params()
    report = run_suite(p, n_x=config.n_x, x_max=config.x_max)

    write_text(report.model_dump_json(indent=2) + "\n", config.output_path)
    _render_report(report)

    if not report.passed:
        raise VerificationFailure(f"{len(report.failures)} verification checks failed: {[item.name for item in report.failures]}")
    logger.debug("<<< cmd_verify() FINISHED (success)")
    return report


def cmd_sweep(config: RunConfig, d_list: list[float] | None = None) -> dict[str, list]:
    """Sweep sigma_h peak statistics over the configured d values.

    Raises:
        ParameterError: If the d list is empty
    """
    d_values = list(config.d if d_list is None else d_list)
    if not d_values:
        raise ParameterError("sweep needs at least one --d value")
    logger.debug(f">>> cmd_sweep() called for {d_values}")

    rows = singularity_sweep(d_values, config.model_params(d_values[0]), config.kgrid())
    columns = {name: [getattr(row, name) for row in rows] for name in SWEEP_COLUMNS}

    table = Table(title="Spectral-singularity sweep")
    for name in SWEEP_COLUMNS:
        table.add_column(name, justify="right")
    for row in rows:
        table.add_row(*(str(row.resonant) if name == "resonant" else f"{getattr(row, name):.6g}" for name in SWEEP_COLUMNS))
    console.print(table)

    write_table(columns, config.output_path, config.format)
    logger.debug("<<< cmd_sweep() FINISHED (success)")
    return columns


FIT_CURVES = ("sigmaBW", "sigmaR", "sigma_h")


def cmd_fit(config: RunConfig) -> dict[str, list]:
    """Breit-Wigner read-off of sigma_BW, sigma_R and sigma_h, one row per curve."""
    logger.debug(">>> cmd_fit() called")
    xs = cross_sections(config.kgrid(), config.model_params())
    fits = [fit_breit_wigner(RealCurve(k=xs.k, values=getattr(xs, name), label=name)) for name in FIT_CURVES]

    columns: dict[str, list] = {"curve": list(FIT_CURVES)}
    for key in fits[0].as_row():
        columns[key] = [fit.as_row()[key] for fit in fits]
    for name, fit in zip(FIT_CURVES, fits, strict=True):
        logger.info(f"{name}: E0={fit.E0_implied:.6g}, Gamma={fit.Gamma_implied:.6g}, peak={fit.sigma_peak:.6g}")

    write_table(columns, config.output_path, config.format)
    logger.debug("<<< cmd_fit() FINISHED (success)")
    return columns
