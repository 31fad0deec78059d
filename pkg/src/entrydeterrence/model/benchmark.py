"""Monopoly benchmark profits and closed-form landmarks of the model."""

import logging
from dataclasses import dataclass
from typing import Optional

from entrydeterrence.errors import DomainError
from entrydeterrence.model.params import ModelParams

logger = logging.getLogger("entrydeterrence.model")


def require_output(X: float) -> float:
    """Reject negative (or NaN) first-period outputs."""
    if not X >= 0:
        raise DomainError(f"first-period output must be nonnegative, got {X}", reason="negative_output")
    return X


def is_feasible_output(params: ModelParams, X: float) -> bool:
    """True if the first-period price alpha - beta*X is nonnegative."""
    return 0 <= X <= params.x_cap


def period1_profit(params: ModelParams, X: float) -> float:
    """First-period monopoly profit (alpha - c - beta*X) * X.

    Negative beyond (alpha - c)/beta; feasibility is left to the caller.
    """
    require_output(X)
    return (params.margin - params.beta * X) * X


def monopoly_second_period_profit(params: ModelParams, X: float) -> float:
    """Second-period monopoly profit (alpha - c - theta*X)**2 / (4*beta)."""
    require_output(X)
    return (params.margin - params.theta * X) ** 2 / (4 * params.beta)


def two_period_monopoly_profit(params: ModelParams, X: float) -> float:
    """Total incumbent profit when no entry takes place."""
    return period1_profit(params, X) + monopoly_second_period_profit(params, X)


def monopoly_profit_slope(params: ModelParams, X: float) -> float:
    """Exact derivative of two_period_monopoly_profit with respect to X."""
    require_output(X)
    return (params.margin - 2 * params.beta * X) - params.theta * (params.margin - params.theta * X) / (2 * params.beta)


@dataclass(frozen=True)
class MonopolyPricing:
    """Second-period pricing of an incumbent that faces no entrant."""

    price: float
    quantity: float
    profit: float

    @property
    def regime(self) -> str:
        return "IncumbentMonopolyPricing"


def monopoly_pricing(params: ModelParams, X: float) -> MonopolyPricing:
    """Second-period monopoly price, quantity and profit after first-period output X."""
    require_output(X)
    intercept = params.alpha - params.theta * X
    if intercept <= params.c:
        return MonopolyPricing(price=params.c, quantity=0.0, profit=0.0)
    price = (intercept + params.c) / 2
    quantity = (intercept - price) / params.beta
    return MonopolyPricing(price=price, quantity=quantity, profit=(price - params.c) * quantity)


@dataclass(frozen=True)
class DerivedConstants:
    """Closed-form landmarks of a parameter set.

    Attributes:
        x_static: Static optimum X_S* = (alpha - c) / (2 beta)
        x_monopoly: Two-period monopoly optimum X_M* = (alpha - c) / (2 beta + theta)
        x_tilde: Crossover between limit and monopoly pricing, (alpha - c) / (2 theta - phi)
        x_entrant_peak: Maximiser of the entrant's gross profit, (alpha - c) / (2 theta)
        pi_e_max: Maximum entrant gross profit
        r_bar: Entry cost at which entry is just blockaded at X_M*
        x_cap: Output at which the first-period price reaches zero
        market_limit: Output that exhausts the entrant's market, (alpha - c) / phi, or None if phi = 0
    """

    x_static: float
    x_monopoly: float
    x_tilde: float
    x_entrant_peak: float
    pi_e_max: float
    r_bar: float
    x_cap: float
    market_limit: Optional[float]


def derived_constants(params: ModelParams) -> DerivedConstants:
    """Compute every closed-form landmark for a valid parameter set."""
    params.require_valid()
    alpha, beta, theta, phi = params.alpha, params.beta, params.theta, params.phi
    margin = params.margin
    if theta <= params.equality_tol:
        raise DomainError("theta = phi = 0: no resistance dynamics", reason="degenerate_model")

    x_static = margin / (2 * beta)
    x_monopoly = margin / (2 * beta + theta)
    x_tilde = margin / (2 * theta - phi)
    x_entrant_peak = margin / (2 * theta)
    pi_e_max = (1 / beta) * ((theta - phi) / theta) * (margin / 2) ** 2
    r_bar = 2 * (theta - phi) * margin ** 2 / (2 * beta + theta) ** 2
    if params.is_generic:
        pi_e_max = 0.0
        r_bar = 0.0

    # 2*beta > theta - phi under both assumptions
    if not x_monopoly < x_tilde:
        raise DomainError(
            f"X_M*={x_monopoly} is not below X~={x_tilde}", reason="assumption_inconsistency"
        )

    constants = DerivedConstants(
        x_static=x_static,
        x_monopoly=x_monopoly,
        x_tilde=x_tilde,
        x_entrant_peak=x_entrant_peak,
        pi_e_max=pi_e_max,
        r_bar=r_bar,
        x_cap=params.x_cap,
        market_limit=margin / phi if params.has_cross_resistance else None,
    )
    logger.debug(f"Derived constants for {params.as_dict()}: {constants}")
    return constants

