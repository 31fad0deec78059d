"""Backward-induction solver for the two-period entry deterrence game."""

import logging
from typing import Iterable, List, Optional

import numpy as np

from entrydeterrence.entry.entrant_profit import crossover_output, max_entrant_profit, monopoly_branch_profit
from entrydeterrence.entry.regions import entry_regions
from entrydeterrence.equilibrium_result import (
    EquilibriumOutcome,
    Optimum,
    Regime,
    StrategyComparison,
)
from entrydeterrence.errors import DomainError
from entrydeterrence.model.benchmark import (
    DerivedConstants,
    derived_constants,
    monopoly_pricing,
    period1_profit,
    two_period_monopoly_profit,
)
from entrydeterrence.model.params import ModelParams
from entrydeterrence.subgame.bertrand import price_equilibrium

logger = logging.getLogger("entrydeterrence.equilibrium")


def _require_entry_cost(R: float) -> float:
    if not R >= 0:
        raise DomainError(f"entry cost must be nonnegative, got {R}", reason="negative_entry_cost")
    return R


def _require_differentiated(params: ModelParams) -> None:
    if params.is_generic:
        raise DomainError("operation requires a differentiated entrant (theta > phi)", reason="no_rent_entrant")


def _is_blockaded(params: ModelParams, constants: DerivedConstants, R: float) -> bool:
    return R >= constants.r_bar - params.profit_tolerance


def accommodation_optimum(params: ModelParams, R: float) -> Optimum:
    """Best first-period profit over the open accommodation interval.

    When X_S* lies outside the interval the supremum sits at the nearer
    endpoint and is reported with ``attained=False``.
    """
    _require_differentiated(params)
    regions = entry_regions(params, _require_entry_cost(R))
    if regions.accommodation_empty:
        raise DomainError(f"accommodation region is empty for R={R}", reason="empty_accommodation")

    x_static = derived_constants(params).x_static
    if regions.in_accommodation(x_static):
        return Optimum(x_static, period1_profit(params, x_static))
    edge = regions.x_low if x_static <= regions.x_low else regions.x_high
    logger.debug(f"Accommodation supremum at open boundary X={edge} for R={R}")
    return Optimum(edge, period1_profit(params, edge), attained=False)


def deterrence_optimum(params: ModelParams, R: float) -> Optimum:
    """Best two-period monopoly profit over the deterrence set.

    X_M* when entry is blockaded there, otherwise the lower boundary X_L(R),
    which is always closer to X_M* than X_H(R).
    """
    _require_differentiated(params)
    _require_entry_cost(R)
    constants = derived_constants(params)
    if _is_blockaded(params, constants, R):
        x = constants.x_monopoly
    else:
        x = entry_regions(params, R).x_low
    return Optimum(x, two_period_monopoly_profit(params, x))


def _generic_comparison(params: ModelParams, constants: DerivedConstants, R: float) -> StrategyComparison:
    deterrence = Optimum(constants.x_monopoly, two_period_monopoly_profit(params, constants.x_monopoly))
    accommodation = None
    if R <= params.equality_tol:
        accommodation = Optimum(constants.x_static, period1_profit(params, constants.x_static))
    return StrategyComparison(R, accommodation, deterrence, blockaded=True)


def compare_strategies(params: ModelParams, R: float) -> StrategyComparison:
    """Accommodation and deterrence payoffs side by side for entry cost R."""
    params.require_valid()
    _require_entry_cost(R)
    constants = derived_constants(params)
    if params.is_generic:
        return _generic_comparison(params, constants, R)

    deterrence = deterrence_optimum(params, R)
    regions = entry_regions(params, R)
    accommodation = None if regions.accommodation_empty else accommodation_optimum(params, R)
    return StrategyComparison(R, accommodation, deterrence, blockaded=_is_blockaded(params, constants, R))


def profit_advantage(params: ModelParams, R: float) -> float:
    """Pi_D*(R) - Pi_A*(R); equals Pi_D*(R) when accommodation is infeasible."""
    _require_differentiated(params)
    return compare_strategies(params, R).advantage


def profit_advantage_curve(params: ModelParams, entry_costs: Iterable[float]) -> np.ndarray:
    """Vectorised profit_advantage over many entry costs.

    Follows the same branches as compare_strategies: stable roots for the
    accommodation interval, the nearer boundary when X_S* falls outside it,
    and X_M* once entry is blockaded.
    """
    params.require_valid()
    _require_differentiated(params)
    r = np.asarray(list(entry_costs), dtype=float)
    if not np.all(r >= 0):
        raise DomainError("entry costs must be nonnegative", reason="negative_entry_cost")

    constants = derived_constants(params)
    theta, phi, beta, margin = params.theta, params.phi, params.beta, params.margin
    empty = r >= max_entrant_profit(params) - params.equality_tol * params.profit_scale

    a, b, cq = theta * (theta - phi), -(theta - phi) * margin, beta * r
    q = -0.5 * (b - np.sqrt(np.maximum(b * b - 4 * a * cq, 0.0)))
    x_low = cq / q
    if params.has_cross_resistance:
        x_high_second = (margin - 2 * np.sqrt(beta * r)) / phi
    else:
        x_high_second = np.full_like(r, np.inf)
    x_high = np.where(r > monopoly_branch_profit(params, crossover_output(params)), q / a, x_high_second)

    x_static = constants.x_static
    inside = (x_low < x_static) & (x_static < x_high)
    x_acc = np.where(inside, x_static, np.where(x_static <= x_low, x_low, x_high))
    pi_accommodation = (margin - beta * x_acc) * x_acc

    x_det = np.where(r >= constants.r_bar - params.profit_tolerance, constants.x_monopoly, x_low)
    pi_deterrence = (margin - beta * x_det) * x_det + (margin - theta * x_det) ** 2 / (4 * beta)
    return np.where(empty, pi_deterrence, pi_deterrence - pi_accommodation)


def solve(params: ModelParams, R: float) -> EquilibriumOutcome:
    """Subgame perfect equilibrium of the entry game for entry cost R."""
    params.require_valid()
    _require_entry_cost(R)
    constants = derived_constants(params)
    comparison = compare_strategies(params, R)
    notes = []
    alternative = None

    if params.is_generic:
        x_star = constants.x_monopoly
        if R <= params.equality_tol:
            regime = Regime.GENERIC_INDIFFERENT
            alternative = constants.x_static
            notes.append("entrant indifferent at zero net profit; no-entry branch reported, X_S* if entry is predicted")
        else:
            regime = Regime.GENERIC_NO_ENTRY
        entry = False
    elif R <= params.equality_tol:
        regime = Regime.ACCOMMODATED
        x_star = constants.x_static
        entry = True
        notes.append("incumbent indifferent: deterrence at X=0 earns the same total")
    elif _is_blockaded(params, constants, R):
        regime = Regime.BLOCKADED
        x_star = constants.x_monopoly
        entry = False
    else:
        regime = Regime.DETERRED
        x_star = entry_regions(params, R).x_low
        entry = False

    if entry:
        pricing = price_equilibrium(params, x_star)
        profit_period2 = pricing.profit_incumbent
    else:
        pricing = monopoly_pricing(params, x_star)
        profit_period2 = pricing.profit

    outcome = EquilibriumOutcome(
        params=params,
        entry_cost=R,
        regime=regime,
        x_star=x_star,
        entry=entry,
        profit_period1=period1_profit(params, x_star),
        profit_period2_incumbent=profit_period2,
        pricing=pricing,
        comparison=comparison,
        constants=constants,
        alternative_x_star=alternative,
        notes=tuple(notes),
    )
    logger.debug(f"Solved R={R}: {outcome.summary}")
    return outcome


class EquilibriumSolver:
    """Solves the entry game for one parameter set over many entry costs."""

    def __init__(self, params: ModelParams):
        """Initialize the solver.

        Args:
            params: Market primitives; validated here
        """
        self.logger = logging.getLogger("entrydeterrence.equilibrium")
        self.params = params.require_valid()
        self.constants = derived_constants(params)
        self.logger.info(
            f"EquilibriumSolver initialized: X_M*={self.constants.x_monopoly:.9g}, "
            f"R_bar={self.constants.r_bar:.9g}, max entrant profit={self.constants.pi_e_max:.9g}"
        )

    def solve(self, R: float) -> EquilibriumOutcome:
        return solve(self.params, R)

    def run(self, entry_costs: Iterable[float]) -> List[EquilibriumOutcome]:
        """Solve for every entry cost, in the order given."""
        outcomes = [solve(self.params, R) for R in entry_costs]
        self.logger.info(f"Solved {len(outcomes)} entry cost(s)")
        return outcomes

    def regime_onset(self, outcomes: List[EquilibriumOutcome], regime: Regime) -> Optional[float]:
        """Smallest entry cost among outcomes classified as regime, if any."""
        costs = [o.entry_cost for o in outcomes if o.regime == regime]
        return min(costs) if costs else None
