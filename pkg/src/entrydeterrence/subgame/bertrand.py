"""Second-period Bertrand equilibrium between incumbent and entrant."""

import logging
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict

from entrydeterrence.model.benchmark import require_output
from entrydeterrence.model.params import ModelParams

logger = logging.getLogger("entrydeterrence.subgame")


class PricingRegime(str, Enum):
    GENERIC_MARGINAL_COST = "GenericMarginalCost"
    LIMIT_PRICING = "LimitPricing"
    ENTRANT_MONOPOLY_PRICING = "EntrantMonopolyPricing"


@dataclass(frozen=True)
class PricingOutcome:
    """Prices, quantities and profits of the post-entry price game.

    The incumbent's price in the differentiated case is c, its best offer
    that still sells nothing. ``market_exhausted`` marks outputs beyond
    (alpha - c)/phi, where the entrant's demand is gone.
    """

    regime: PricingRegime
    p_incumbent: float
    p_entrant: float
    q_incumbent: float
    q_entrant: float
    profit_incumbent: float
    profit_entrant: float
    gap: float
    market_exhausted: bool = False

    def as_dict(self) -> Dict[str, Any]:
        record = asdict(self)
        record["regime"] = self.regime.value
        return record


def effectiveness_gap(params: ModelParams, X: float) -> float:
    """Quality advantage (theta - phi) * X of the entrant's drug."""
    require_output(X)
    if params.is_generic:
        return 0.0
    return (params.theta - params.phi) * X


def price_equilibrium(params: ModelParams, X: float) -> PricingOutcome:
    """Bertrand equilibrium of the second period given first-period output X."""
    params.require_valid()
    gap = effectiveness_gap(params, X)
    c = params.c

    if params.is_generic or X == 0:
        # Homogeneous goods at marginal cost: shares are split evenly
        market = max(params.alpha - params.theta * X - c, 0.0) / params.beta
        return PricingOutcome(
            regime=PricingRegime.GENERIC_MARGINAL_COST,
            p_incumbent=c,
            p_entrant=c,
            q_incumbent=market / 2,
            q_entrant=market / 2,
            profit_incumbent=0.0,
            profit_entrant=0.0,
            gap=gap,
        )

    intercept = params.alpha - params.phi * X
    if intercept <= c:
        logger.debug(f"Entrant market exhausted at X={X}")
        return PricingOutcome(
            regime=PricingRegime.ENTRANT_MONOPOLY_PRICING,
            p_incumbent=c,
            p_entrant=c,
            q_incumbent=0.0,
            q_entrant=0.0,
            profit_incumbent=0.0,
            profit_entrant=0.0,
            gap=gap,
            market_exhausted=True,
        )

    x_tilde = params.margin / (2 * params.theta - params.phi)
    if X < x_tilde:
        regime = PricingRegime.LIMIT_PRICING
        p_entrant = c + gap
    else:
        regime = PricingRegime.ENTRANT_MONOPOLY_PRICING
        p_entrant = (intercept + c) / 2

    q_entrant = (intercept - p_entrant) / params.beta
    return PricingOutcome(
        regime=regime,
        p_incumbent=c,
        p_entrant=p_entrant,
        q_incumbent=0.0,
        q_entrant=q_entrant,
        profit_incumbent=0.0,
        profit_entrant=(p_entrant - c) * q_entrant,
        gap=gap,
    )
