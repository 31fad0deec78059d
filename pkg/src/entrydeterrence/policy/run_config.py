"""Validated run configuration assembled from defaults, a config file and flags."""

import logging
import math
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from entrydeterrence.model.params import ModelParams
from entrydeterrence.oracle.grid import GridSpec
from entrydeterrence.policy.config_parser import ConfigParser

logger = logging.getLogger("entrydeterrence.config")


class ValueRange(BaseModel):
    """Inclusive range lo, lo + step, ... <= hi."""

    lo: float
    hi: float
    step: float = Field(gt=0)

    @model_validator(mode="after")
    def _ordered(self) -> "ValueRange":
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and math.isfinite(self.step)):
            raise ValueError("range bounds must be finite")
        if self.hi < self.lo:
            raise ValueError(f"range upper bound {self.hi} is below lower bound {self.lo}")
        return self

    @classmethod
    def parse(cls, text: str) -> "ValueRange":
        """Parse 'LO:HI:STEP'."""
        return cls(**_split_range(text))

    def values(self) -> List[float]:
        count = int(math.floor((self.hi - self.lo) / self.step + 1e-9))
        return [self.lo + i * self.step for i in range(count + 1)]


def _split_range(text: str) -> Dict[str, float]:
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ValueError(f"expected LO:HI:STEP, got {text!r}")
    lo, hi, step = (float(part) for part in parts)
    return {"lo": lo, "hi": hi, "step": step}


def _coerce_range(value: Any) -> Any:
    if value is None or isinstance(value, ValueRange):
        return value
    if isinstance(value, str):
        return _split_range(value)
    if isinstance(value, (list, tuple)):
        lo, hi, step = value
        return {"lo": lo, "hi": hi, "step": step}
    return value


class RunConfig(BaseModel):
    """Everything a CLI run needs, validated once."""

    alpha: float
    beta: float
    theta: float
    phi: float
    c: float
    entry_cost: float = Field(ge=0)
    entry_cost_range: Optional[ValueRange] = None
    sweep_phi: Optional[ValueRange] = None
    sweep_theta: Optional[ValueRange] = None
    output_path: Optional[str] = None
    output_format: Literal["csv", "jsonl"] = "csv"
    price_step: Optional[float] = Field(default=None, gt=0)
    output_step: Optional[float] = Field(default=None, gt=0)
    price_step_factor: float = Field(default=1e-3, gt=0)
    output_step_factor: float = Field(default=1e-3, gt=0)
    equality_tolerance: float = Field(default=1e-12, ge=0)
    profit_tolerance: float = Field(default=1e-9, ge=0)
    figure_samples: int = Field(default=21, ge=2)
    figure_x_max: Optional[float] = Field(default=None, gt=0)
    check_x_points: int = Field(default=100, ge=1)
    check_r_points: int = Field(default=121, ge=2)

    @field_validator("entry_cost_range", "sweep_phi", "sweep_theta", mode="before")
    @classmethod
    def _parse_ranges(cls, value: Any) -> Any:
        return _coerce_range(value)

    @field_validator("entry_cost_range")
    @classmethod
    def _non_negative_costs(cls, value: Optional[ValueRange]) -> Optional[ValueRange]:
        if value is not None and value.lo < 0:
            raise ValueError("entry costs must be non-negative")
        return value

    @model_validator(mode="after")
    def _single_sweep_axis(self) -> "RunConfig":
        if self.sweep_phi is not None and self.sweep_theta is not None:
            raise ValueError("sweep either phi or theta, not both")
        return self

    @classmethod
    def from_sources(cls, config_path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        """Defaults, then the config file, then explicit flags."""
        config = ConfigParser().parse(config_path)
        fields: Dict[str, Any] = dict(config["model"])
        fields["entry_cost"] = config["entry_cost"]
        fields["entry_cost_range"] = config.get("entry_cost_range")
        fields["sweep_phi"] = config.get("sweep_phi")
        fields["sweep_theta"] = config.get("sweep_theta")

        numerics = config.get("numerics", {})
        fields["equality_tolerance"] = numerics.get("equality_tolerance")
        fields["profit_tolerance"] = numerics.get("profit_tolerance")

        oracle = config.get("oracle", {})
        for key in ("price_step_factor", "output_step_factor", "price_step", "output_step"):
            fields[key] = oracle.get(key)
        fields["check_x_points"] = oracle.get("x_points")
        fields["check_r_points"] = oracle.get("r_points")

        figure = config.get("figure", {})
        fields["figure_samples"] = figure.get("samples")
        fields["figure_x_max"] = figure.get("x_max")

        output = config.get("output", {})
        fields["output_format"] = output.get("format")
        fields["output_path"] = output.get("path")

        fields = {key: value for key, value in fields.items() if value is not None}
        fields.update({key: value for key, value in (overrides or {}).items() if value is not None})
        logger.debug(f"Run configuration fields: {fields}")
        return cls(**fields)

    def model_params(self, theta: Optional[float] = None, phi: Optional[float] = None) -> ModelParams:
        return ModelParams(
            alpha=self.alpha,
            beta=self.beta,
            theta=self.theta if theta is None else theta,
            phi=self.phi if phi is None else phi,
            c=self.c,
            equality_tol=self.equality_tolerance,
            profit_tol=self.profit_tolerance,
        )

    def grid_spec(self, params: ModelParams) -> GridSpec:
        return GridSpec.default_for(
            params,
            price_step=self.price_step,
            output_step=self.output_step,
            price_step_factor=self.price_step_factor,
            output_step_factor=self.output_step_factor,
        )

    def entry_costs(self) -> List[float]:
        if self.entry_cost_range is None:
            return [self.entry_cost]
        return self.entry_cost_range.values()

    def axis_points(self) -> List[Tuple[float, float]]:
        """(theta, phi) pairs along the sweep axis, or the single configured pair."""
        if self.sweep_phi is not None:
            return [(self.theta, phi) for phi in self.sweep_phi.values()]
        if self.sweep_theta is not None:
            return [(theta, self.phi) for theta in self.sweep_theta.values()]
        return [(self.theta, self.phi)]
