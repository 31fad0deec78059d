"""Grid specification and report type for the brute-force oracle."""

import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

import numpy as np

from entrydeterrence.errors import GridError
from entrydeterrence.model.params import ModelParams

DEFAULT_PRICE_STEP_FACTOR = 1e-3
DEFAULT_OUTPUT_STEP_FACTOR = 1e-3


@dataclass(frozen=True)
class GridSpec:
    """Discretisation used by the oracle.

    Attributes:
        price_step: Spacing of candidate entrant and incumbent prices
        output_step: Spacing of candidate first-period outputs
        x_max: Largest candidate first-period output
    """

    price_step: float
    output_step: float
    x_max: float

    def __post_init__(self):
        for name in ("price_step", "output_step", "x_max"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise GridError(f"{name} must be positive and finite, got {value}")

    @classmethod
    def default_for(
        cls,
        params: ModelParams,
        price_step: Optional[float] = None,
        output_step: Optional[float] = None,
        x_max: Optional[float] = None,
        price_step_factor: float = DEFAULT_PRICE_STEP_FACTOR,
        output_step_factor: float = DEFAULT_OUTPUT_STEP_FACTOR,
    ) -> "GridSpec":
        """Steps proportional to the market size unless given explicitly."""
        x_max = params.x_cap if x_max is None else x_max
        return cls(
            price_step=price_step_factor * params.margin if price_step is None else price_step,
            output_step=output_step_factor * params.x_cap if output_step is None else output_step,
            x_max=x_max,
        )

    def halved(self) -> "GridSpec":
        return replace(self, price_step=self.price_step / 2, output_step=self.output_step / 2)

    def outputs(self) -> np.ndarray:
        """Output grid 0, h, 2h, ... up to x_max inclusive."""
        count = int(math.floor(self.x_max / self.output_step + 1e-9))
        return np.arange(count + 1) * self.output_step

    def prices(self, low: float, high: float) -> np.ndarray:
        """Price grid low, low + s, ... reaching at least high."""
        count = max(int(math.ceil((high - low) / self.price_step)), 0)
        return low + np.arange(count + 1) * self.price_step


@dataclass(frozen=True)
class OracleReport:
    """Comparison of one closed-form value with its brute-force counterpart.

    ``checks`` carries extra pass/fail conditions (regime and output
    agreement for equilibrium checks); all of them must hold to pass.
    """

    label: str
    closed_form_value: float
    brute_force_value: float
    discrepancy: float
    tolerance_used: float
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.tolerance_used and all(self.checks.values())

    def get_report(self) -> Dict[str, Any]:
        report = {
            "label": self.label,
            "status": "pass" if self.passed else "FAIL",
            "closed_form": self.closed_form_value,
            "brute_force": self.brute_force_value,
            "discrepancy": self.discrepancy,
            "tolerance": self.tolerance_used,
        }
        report.update(self.details)
        return report
