"""Command-line surface: configuration, result tables and subcommands."""

from susyscatter.cli.commands import cmd_curves, cmd_fit, cmd_phases, cmd_potential, cmd_sweep, cmd_verify
from susyscatter.cli.config import RunConfig, load_config
from susyscatter.cli.tables import read_csv_table, render_table, write_table

__all__ = [
    "RunConfig",
    "cmd_curves",
    "cmd_fit",
    "cmd_phases",
    "cmd_potential",
    "cmd_sweep",
    "cmd_verify",
    "load_config",
    "read_csv_table",
    "render_table",
    "write_table",
]
