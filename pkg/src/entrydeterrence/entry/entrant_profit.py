"""Entrant's gross profit as a function of the incumbent's first-period output."""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from entrydeterrence.errors import DomainError
from entrydeterrence.model.benchmark import require_output
from entrydeterrence.model.params import ModelParams

logger = logging.getLogger("entrydeterrence.entry")


def crossover_output(params: ModelParams) -> float:
    """X~ = (alpha - c) / (2 theta - phi), where limit and monopoly prices meet."""
    return params.margin / (2 * params.theta - params.phi)


def limit_branch_profit(params: ModelParams, X: float) -> float:
    """Profit under limit pricing, (theta - phi) X (alpha - c - theta X) / beta."""
    return (params.theta - params.phi) * X * (params.margin - params.theta * X) / params.beta


def monopoly_branch_profit(params: ModelParams, X: float) -> float:
    """Profit under entrant monopoly pricing, (alpha - c - phi X)**2 / (4 beta)."""
    return (params.margin - params.phi * X) ** 2 / (4 * params.beta)


def limit_branch_slope(params: ModelParams, X: float) -> float:
    return (params.theta - params.phi) * (params.margin - 2 * params.theta * X) / params.beta


def monopoly_branch_slope(params: ModelParams, X: float) -> float:
    return -params.phi * (params.margin - params.phi * X) / (2 * params.beta)


def entrant_gross_profit(params: ModelParams, X: float) -> float:
    """Entrant's post-entry profit before the entry cost is paid.

    Zero for a generic entrant, at X = 0, and once the entrant's
    market is exhausted at X >= (alpha - c)/phi.
    """
    require_output(X)
    if params.is_generic or X == 0:
        return 0.0
    if X < crossover_output(params):
        return limit_branch_profit(params, X)
    if params.margin - params.phi * X <= 0:
        return 0.0
    return monopoly_branch_profit(params, X)


def entrant_profit_slope(params: ModelParams, X: float) -> float:
    """Derivative of entrant_gross_profit; at X~ both branch slopes coincide."""
    require_output(X)
    if params.is_generic:
        return 0.0
    if X < crossover_output(params):
        return limit_branch_slope(params, X)
    if params.margin - params.phi * X <= 0:
        return 0.0
    return monopoly_branch_slope(params, X)


def entrant_gross_profit_curve(params: ModelParams, xs: np.ndarray) -> np.ndarray:
    """Vectorised entrant_gross_profit over an array of nonnegative outputs."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise DomainError("first-period outputs must be nonnegative", reason="negative_output")
    if params.is_generic:
        return np.zeros_like(xs)

    limit = (params.theta - params.phi) * xs * (params.margin - params.theta * xs) / params.beta
    residual = np.maximum(params.margin - params.phi * xs, 0.0)
    monopoly = residual ** 2 / (4 * params.beta)
    return np.where(xs < crossover_output(params), limit, monopoly)


@dataclass(frozen=True)
class EntrantPeak:
    """Location and value of the entrant's maximum gross profit.

    ``plateau`` is set when phi = 0: the maximum then holds on the whole
    ray [x_peak, infinity).
    """

    x_peak: float
    pi_max: float
    plateau: bool = False

    def as_tuple(self) -> Tuple[float, float]:
        return self.x_peak, self.pi_max


def max_entrant_profit(params: ModelParams) -> float:
    """(1/beta) * ((theta - phi)/theta) * ((alpha - c)/2)**2."""
    if params.is_generic:
        return 0.0
    return (1 / params.beta) * ((params.theta - params.phi) / params.theta) * (params.margin / 2) ** 2


def entrant_profit_peak(params: ModelParams) -> EntrantPeak:
    """Maximiser and maximum of the entrant's gross profit."""
    params.require_valid()
    if params.is_generic:
        raise DomainError("theta = phi: a generic entrant earns no rent", reason="no_rent_entrant")
    pi_max = max_entrant_profit(params)
    if not params.has_cross_resistance:
        return EntrantPeak(x_peak=crossover_output(params), pi_max=pi_max, plateau=True)
    return EntrantPeak(x_peak=params.margin / (2 * params.theta), pi_max=pi_max)
