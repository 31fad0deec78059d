"""Brute-force counterparts of the pricing subgame and the equilibrium characterisation.

Payoffs are rebuilt from the demand system alone: inverse demands
alpha - theta*X - beta*q for the incumbent and alpha - phi*X - beta*q for
the entrant. Only the entry test reuses the closed-form entrant profit,
since sampling the boundary of the accommodation region is ill-posed.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from entrydeterrence.entry.entrant_profit import entrant_gross_profit, entrant_gross_profit_curve
from entrydeterrence.equilibrium_result import Regime
from entrydeterrence.equilibrium_solver import solve
from entrydeterrence.model.benchmark import monopoly_profit_slope, require_output
from entrydeterrence.model.params import ModelParams
from entrydeterrence.oracle.grid import GridSpec, OracleReport
from entrydeterrence.subgame.bertrand import PricingOutcome

logger = logging.getLogger("entrydeterrence.oracle")


def _intercepts(params: ModelParams, X: float) -> Tuple[float, float]:
    """Second-period demand intercepts (incumbent, entrant)."""
    return params.alpha - params.theta * X, params.alpha - params.phi * X


def _tie_slack(params: ModelParams) -> float:
    """Price differences this close to the quality gap count as exact ties."""
    return params.equality_tol * max(params.alpha, 1.0)


def _entrant_profit_at(params: ModelParams, X: float, p_entrant: np.ndarray, p_incumbent: float) -> np.ndarray:
    """Entrant profit at candidate prices against a fixed incumbent price.

    Consumers buy the entrant's drug whenever its premium does not exceed
    the quality difference; exact ties go to the entrant.
    """
    a_incumbent, a_entrant = _intercepts(params, X)
    quality_gap = a_entrant - a_incumbent
    wins = p_entrant - p_incumbent <= quality_gap + _tie_slack(params)
    quantity = np.maximum(a_entrant - p_entrant, 0.0) / params.beta
    return np.where(wins, (p_entrant - params.c) * quantity, 0.0)


def _incumbent_profit_at(params: ModelParams, X: float, p_incumbent: np.ndarray, p_entrant: float) -> np.ndarray:
    """Incumbent profit at candidate prices; it sells only if strictly preferred."""
    a_incumbent, a_entrant = _intercepts(params, X)
    quality_gap = a_entrant - a_incumbent
    wins = p_entrant - p_incumbent > quality_gap + _tie_slack(params)
    quantity = np.maximum(a_incumbent - p_incumbent, 0.0) / params.beta
    return np.where(wins, (p_incumbent - params.c) * quantity, 0.0)


def best_entrant_price(params: ModelParams, X: float, grid: GridSpec) -> Tuple[float, float, float]:
    """Grid best response of the entrant to an incumbent pricing at cost.

    Returns:
        Tuple of (profit, price, quantity)
    """
    require_output(X)
    _, a_entrant = _intercepts(params, X)
    if a_entrant <= params.c:
        return 0.0, params.c, 0.0
    prices = grid.prices(params.c, (a_entrant + params.c) / 2 + grid.price_step)
    profits = _entrant_profit_at(params, X, prices, params.c)
    best = int(np.argmax(profits))
    quantity = max(a_entrant - prices[best], 0.0) / params.beta
    return float(profits[best]), float(prices[best]), quantity


def oracle_subgame_profit(params: ModelParams, X: float, grid: GridSpec) -> OracleReport:
    """Compare the closed-form entrant profit with a discretised price best response."""
    params.require_valid()
    closed_form = entrant_gross_profit(params, X)
    brute_force, price, quantity = best_entrant_price(params, X, grid)
    # First order in the price step, scaled by the most the entrant can sell at p = c
    _, a_entrant = _intercepts(params, X)
    q_bound = max(a_entrant - params.c, 0.0) / params.beta
    tolerance = 5 * grid.price_step * q_bound + params.profit_tolerance
    report = OracleReport(
        label=f"subgame X={X:.9g}",
        closed_form_value=closed_form,
        brute_force_value=brute_force,
        discrepancy=abs(closed_form - brute_force),
        tolerance_used=tolerance,
        details={"p_entrant": price, "q_entrant": quantity},
    )
    logger.debug(f"Subgame oracle at X={X}: {report.get_report()}")
    return report


def price_deviation_gains(
    params: ModelParams, X: float, outcome: PricingOutcome, grid: GridSpec
) -> Tuple[float, float]:
    """Largest gain from a one-step price deviation by (entrant, incumbent).

    Prices below marginal cost are never offered.
    """
    step = grid.price_step
    entrant_now = _entrant_profit_at(params, X, np.array([outcome.p_entrant]), outcome.p_incumbent)[0]
    entrant_moves = np.array([p for p in (outcome.p_entrant - step, outcome.p_entrant + step) if p >= params.c])
    entrant_best = _entrant_profit_at(params, X, entrant_moves, outcome.p_incumbent).max(initial=entrant_now)

    incumbent_now = _incumbent_profit_at(params, X, np.array([outcome.p_incumbent]), outcome.p_entrant)[0]
    incumbent_moves = np.array(
        [p for p in (outcome.p_incumbent - step, outcome.p_incumbent + step) if p >= params.c]
    )
    incumbent_best = _incumbent_profit_at(params, X, incumbent_moves, outcome.p_entrant).max(initial=incumbent_now)
    return float(entrant_best - entrant_now), float(incumbent_best - incumbent_now)


def _unconstrained_peak(xs: np.ndarray, values: np.ndarray) -> float:
    """Maximiser of a sampled concave curve, refined by a local quadratic fit."""
    best = int(np.argmax(values))
    lo, hi = max(best - 2, 0), min(best + 3, len(xs))
    if hi - lo < 3:
        return float(xs[best])
    a, b, _ = np.polyfit(xs[lo:hi], values[lo:hi], 2)
    if a >= 0:
        return float(xs[best])
    return float(np.clip(-b / (2 * a), xs[0], xs[-1]))


def oracle_regime_map(params: ModelParams, r_values: Sequence[float], grid: GridSpec) -> List[OracleReport]:
    """Brute-force incumbent output search for every entry cost, checked against solve().

    Ties in payoff go to the smallest output. At zero entry cost the
    incumbent's indifference between regimes is resolved in favour of
    accommodation, as in the closed-form characterisation.
    """
    params.require_valid()
    xs = grid.outputs()
    h = grid.output_step
    first_period = (params.alpha - params.beta * xs - params.c) * xs
    a_incumbent = params.alpha - params.theta * xs
    monopoly_rent = (a_incumbent - params.c) ** 2 / (4 * params.beta)
    no_threat = first_period + monopoly_rent
    pi_entrant = entrant_gross_profit_curve(params, xs)
    x_unconstrained = _unconstrained_peak(xs, no_threat)
    curvature = (params.beta + params.theta ** 2 / (4 * params.beta)) * h ** 2

    reports = []
    for R in r_values:
        enters = pi_entrant > R
        deter_payoff = np.where(enters, -np.inf, no_threat)
        i_det = int(np.argmax(deter_payoff))
        choice, entry = i_det, False
        if enters.any():
            accommodate_payoff = np.where(enters, first_period, -np.inf)
            i_acc = int(np.argmax(accommodate_payoff))
            best_acc, best_det = accommodate_payoff[i_acc], deter_payoff[i_det]
            zero_cost = R <= params.equality_tol
            if best_acc > best_det or (zero_cost and best_acc >= best_det - curvature):
                choice, entry = i_acc, True

        if entry:
            regime = Regime.ACCOMMODATED
        elif params.is_generic:
            regime = Regime.GENERIC_INDIFFERENT if R <= params.equality_tol else Regime.GENERIC_NO_ENTRY
        elif entrant_gross_profit(params, x_unconstrained) <= R + params.profit_tolerance:
            regime = Regime.BLOCKADED
        else:
            regime = Regime.DETERRED

        x_brute = float(xs[choice])
        value_brute = float(first_period[choice] if entry else no_threat[choice])
        outcome = solve(params, R)
        slope = 0.0 if outcome.entry else abs(monopoly_profit_slope(params, outcome.x_star))
        tolerance = curvature + slope * h + params.profit_tolerance
        reports.append(
            OracleReport(
                label=f"spne R={R:.9g}",
                closed_form_value=outcome.total_incumbent,
                brute_force_value=value_brute,
                discrepancy=abs(outcome.total_incumbent - value_brute),
                tolerance_used=tolerance,
                checks={
                    "regime": regime == outcome.regime,
                    "x_star": abs(x_brute - outcome.x_star) <= 2 * h,
                },
                details={
                    "regime_closed_form": outcome.regime.value,
                    "regime_brute_force": regime.value,
                    "x_closed_form": outcome.x_star,
                    "x_brute_force": x_brute,
                },
            )
        )
    failed = sum(not r.passed for r in reports)
    logger.debug(f"Equilibrium oracle: {len(reports)} entry cost(s), {failed} failure(s)")
    return reports


def oracle_spne(params: ModelParams, R: float, grid: GridSpec) -> OracleReport:
    """Brute-force check of the equilibrium for a single entry cost."""
    return oracle_regime_map(params, [R], grid)[0]


def worst_subgame_discrepancy(params: ModelParams, outputs: Sequence[float], grid: GridSpec) -> float:
    """Largest closed-form versus brute-force entrant profit gap over outputs."""
    return max(oracle_subgame_profit(params, X, grid).discrepancy for X in outputs)
