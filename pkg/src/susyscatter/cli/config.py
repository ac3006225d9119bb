"""Run configuration for the command-line surface.

Precedence: built-in defaults < JSON config file < command-line flags.
"""

import json
from pathlib import Path
from typing import Any, Literal

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator

from susyscatter.core.params import KGrid, ModelParams, XGrid
from susyscatter.errors import OutputError, ParameterError
from susyscatter.utils.logging import summarize_params


class RunConfig(BaseModel):
    """Parameters and output settings of one CLI run."""

    model_config = {"extra": "forbid", "frozen": True}

    a1: float = Field(3.0, description="Stiffness of the background potential")
    b: float = Field(0.5, description="Real part of the would-be singular wavenumber")
    d: list[float] = Field(default_factory=lambda: [-0.1], description="Imaginary shift(s); several for phases and sweep")
    k_min: float = Field(1e-3, description="Smallest momentum")
    k_max: float = Field(3.0, description="Largest momentum")
    n_k: int = Field(2000, description="Number of momenta")
    x_max: float | None = Field(None, description="Radial extent, default 25/a1")
    n_x: int | None = Field(None, description="Radial node count; also fixes the oracle step when given")
    output_path: Path | None = Field(None, description="Output file, stdout when absent")
    format: Literal["csv", "json"] = Field("csv", description="Table format")

    @field_validator("d", mode="before")
    @classmethod
    def _listify_d(cls, value: Any) -> Any:
        if isinstance(value, int | float):
            return [value]
        return value

    @field_validator("d")
    @classmethod
    def _non_empty_d(cls, value: list[float]) -> list[float]:
        if not value:
            raise ValueError("at least one d value is required")
        return value

    def model_params(self, d: float | None = None) -> ModelParams:
        """ModelParams for ``d``, or for the single configured d."""
        if d is None:
            if len(self.d) != 1:
                raise ParameterError(f"this command takes exactly one --d, got {len(self.d)}")
            d = self.d[0]
        return ModelParams(a1=self.a1, b=self.b, d=d)

    def kgrid(self) -> KGrid:
        return KGrid(k_min=self.k_min, k_max=self.k_max, n=self.n_k)

    def xgrid(self, default_n: int = 2001) -> XGrid:
        """Radial grid starting at the origin, for tabulating potentials."""
        x_max = 25.0 / self.a1 if self.x_max is None else self.x_max
        return XGrid(x_min=0.0, x_max=x_max, n=self.n_x or default_n)

    def validate_params(self) -> None:
        """Build every ModelParams and grid once so bad input fails before any work."""
        for d in self.d:
            ModelParams(a1=self.a1, b=self.b, d=d)
        self.kgrid()
        self.xgrid()
        if self.x_max is not None and self.a1 * self.x_max < 20:
            raise ParameterError(f"x_max={self.x_max} too short: a1 * x_max must be at least 20")


def load_config(path: Path | None = None, overrides: dict[str, Any] | None = None) -> RunConfig:
    """Merge defaults, an optional JSON file and flag overrides into a RunConfig.

    Args:
        path: JSON file with any subset of the RunConfig fields
        overrides: Values from command-line flags; ``None`` entries are ignored

    Raises:
        OutputError: If the config file cannot be read
        ParameterError: If the file is not valid JSON or a value fails validation
    """
    values: dict[str, Any] = {}
    if path is not None:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise OutputError(f"cannot read config file {path}: {e}") from e
        try:
            loaded = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParameterError(f"config file {path} is not valid JSON: {e}") from e
        if not isinstance(loaded, dict):
            raise ParameterError(f"config file {path} must hold a JSON object")
        values.update(loaded)
        logger.debug(summarize_params(loaded, f"Config file {path}"))

    values.update({key: value for key, value in (overrides or {}).items() if value is not None})

    try:
        config = RunConfig(**values)
    except ValidationError as e:
        raise ParameterError(f"invalid configuration: {e}") from e

    config.validate_params()
    logger.debug(summarize_params(config.model_dump(), "RunConfig"))
    return config
