"""Entry point of the ``susyscatter`` command.

Usage:
    susyscatter curves --out curves.csv
    susyscatter phases --d -0.1 --d -0.5 --d -1.0
    susyscatter verify
    susyscatter sweep --d -1 --d -0.5 --d -0.1 --format json

Exit codes: 0 ok, 2 bad parameters, 3 verification failure, 4 numerical failure, 5 I/O.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from loguru import logger

from susyscatter import __version__
from susyscatter.cli.commands import cmd_curves, cmd_fit, cmd_phases, cmd_potential, cmd_sweep, cmd_verify
from susyscatter.cli.config import RunConfig, load_config
from susyscatter.errors import ScatteringError
from susyscatter.utils.logging import configure_logging

EXIT_OK = 0
EXIT_USAGE = 2

COMMANDS: dict[str, tuple[Callable[[RunConfig], Any], str]] = {
    "curves": (cmd_curves, "Cross sections sigma0, sigma_e, sigma_r, sigma_t, sigma_h, sigmaR, sigmaBW"),
    "phases": (cmd_phases, "Unwrapped phase shifts delta0, deltaR, deltaBW, delta_h per --d"),
    "potential": (cmd_potential, "v0, V and w on the radial grid"),
    "verify": (cmd_verify, "Run the ODE oracle and identity suite; JSON report"),
    "sweep": (cmd_sweep, "sigma_h resonance statistics over several --d"),
    "fit": (cmd_fit, "Breit-Wigner read-off of sigmaBW, sigmaR and sigma_h"),
}


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a1", type=float, help="Background stiffness a1 (default: 3)")
    parser.add_argument("--b", type=float, help="Real part b (default: 0.5)")
    parser.add_argument("--d", type=float, action="append", help="Imaginary shift d < 0; repeat for phases and sweep (default: -0.1)")
    parser.add_argument("--k-min", dest="k_min", type=float, help="Smallest momentum (default: 1e-3)")
    parser.add_argument("--k-max", dest="k_max", type=float, help="Largest momentum (default: 3)")
    parser.add_argument("--n-k", dest="n_k", type=int, help="Number of momenta (default: 2000)")
    parser.add_argument("--x-max", dest="x_max", type=float, help="Radial extent (default: 25/a1)")
    parser.add_argument("--n-x", dest="n_x", type=int, help="Radial node count; fixes the oracle step in verify")
    parser.add_argument("--config", type=Path, help="JSON file with any of the above settings")
    parser.add_argument("--format", choices=["csv", "json"], help="Output format (default: csv)")
    parser.add_argument("--out", dest="output_path", type=Path, help="Output file (default: stdout)")
    parser.add_argument("--log-level", dest="log_level", help="Console log level (default: LOG_LEVEL or INFO)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susyscatter",
        description="Scattering off a complex SUSY partner of 2 a1^2 / sinh^2(a1 x) and its Hermitian counterpart",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        _add_run_flags(subparsers.add_parser(name, help=help_text, description=help_text))
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    configure_logging(level=args.log_level)
    overrides = {key: value for key, value in vars(args).items() if key not in ("command", "config", "log_level")}

    try:
        config = load_config(args.config, overrides)
        logger.info(f"🚀 susyscatter {args.command}")
        command, _ = COMMANDS[args.command]
        command(config)
    except ScatteringError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code

    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
