"""Market parameters and validation of the model assumptions."""

import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

from entrydeterrence.errors import InvalidParametersError

logger = logging.getLogger("entrydeterrence.model")

DEFAULT_EQUALITY_TOL = 1e-12
DEFAULT_PROFIT_TOL = 1e-9

ASSUMPTION_BETA = "beta > 0"
ASSUMPTION_MARKET = "alpha > c (positive market size)"
ASSUMPTION_COST = "c >= 0"
ASSUMPTION_THETA_POSITIVE = "theta > 0 (use builds resistance)"
ASSUMPTION_MARKUP = "theta < 2*beta (positive primary mark-up)"
ASSUMPTION_OWN_RESISTANCE = "theta >= phi (own resistance dominates)"
ASSUMPTION_PHI = "phi >= 0 (nonnegative cross-resistance)"
ASSUMPTION_FINITE = "all parameters finite"


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of checking a parameter set against every assumption."""

    violations: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def message(self) -> str:
        if self.valid:
            return "all assumptions hold"
        return "; ".join(f"violates {name}" for name in self.violations)


@dataclass(frozen=True)
class ModelParams:
    """The five market primitives of the two-period entry game.

    Attributes:
        alpha: Demand intercept (price units)
        beta: Demand slope (price per quantity)
        theta: Own-resistance coefficient
        phi: Cross-resistance coefficient
        c: Constant marginal cost
        equality_tol: Absolute tolerance for equality tests such as theta == phi
        profit_tol: Relative profit tolerance, scaled by (alpha - c)**2 / beta
    """

    alpha: float
    beta: float
    theta: float
    phi: float
    c: float
    equality_tol: float = field(default=DEFAULT_EQUALITY_TOL, compare=False)
    profit_tol: float = field(default=DEFAULT_PROFIT_TOL, compare=False)

    @property
    def margin(self) -> float:
        """Primary mark-up alpha - c."""
        return self.alpha - self.c

    @property
    def x_cap(self) -> float:
        """Largest first-period output with a nonnegative price."""
        return self.alpha / self.beta

    @property
    def is_generic(self) -> bool:
        """True when the entrant's drug is equivalent to the incumbent's."""
        return abs(self.theta - self.phi) <= self.equality_tol

    @property
    def has_cross_resistance(self) -> bool:
        return self.phi > self.equality_tol

    @property
    def profit_scale(self) -> float:
        return self.margin ** 2 / self.beta

    @property
    def profit_tolerance(self) -> float:
        """Absolute tolerance for comparisons between profit values."""
        return self.profit_tol * self.profit_scale

    @property
    def validation(self) -> ValidationResult:
        return validate(self)

    def require_valid(self) -> "ModelParams":
        """Return self, or raise InvalidParametersError listing every violation."""
        result = validate(self)
        if not result.valid:
            raise InvalidParametersError(result)
        return self

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "theta": self.theta,
            "phi": self.phi,
            "c": self.c,
        }


def validate(params: ModelParams) -> ValidationResult:
    """Check every model assumption and report all violations by name."""
    values = (params.alpha, params.beta, params.theta, params.phi, params.c)
    if not all(math.isfinite(v) for v in values):
        return ValidationResult((ASSUMPTION_FINITE,))

    tol = params.equality_tol
    violations = []
    if params.beta <= 0:
        violations.append(ASSUMPTION_BETA)
    if params.alpha <= params.c:
        violations.append(ASSUMPTION_MARKET)
    if params.c < 0:
        violations.append(ASSUMPTION_COST)
    if params.theta <= 0:
        violations.append(ASSUMPTION_THETA_POSITIVE)
    if params.theta >= 2 * params.beta:
        violations.append(ASSUMPTION_MARKUP)
    if params.theta < params.phi - tol:
        violations.append(ASSUMPTION_OWN_RESISTANCE)
    if params.phi < 0:
        violations.append(ASSUMPTION_PHI)

    result = ValidationResult(tuple(violations))
    if not result.valid:
        logger.debug(f"Parameter validation failed: {result.message}")
    return result
