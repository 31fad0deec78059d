"""Accommodation and deterrence regions and the entrant's entry decision."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from entrydeterrence.entry.entrant_profit import (
    crossover_output,
    max_entrant_profit,
    monopoly_branch_profit,
)
from entrydeterrence.errors import DomainError
from entrydeterrence.model.benchmark import require_output
from entrydeterrence.model.params import ModelParams

logger = logging.getLogger("entrydeterrence.entry")


class EntryDecision(str, Enum):
    ENTER = "Enter"
    STAY_OUT = "StayOut"
    INDIFFERENT = "Indifferent"


@dataclass(frozen=True)
class EntryRegions:
    """Accommodation interval (x_low, x_high) and its complement for one entry cost.

    Boundary points belong to deterrence. ``x_high_unbounded`` replaces
    x_high when phi = 0 and entry stays profitable for every X > x_low.
    x_low and x_high are None when the entry cost exceeds the entrant's
    maximum profit.
    """

    entry_cost: float
    x_low: Optional[float]
    x_high: Optional[float]
    x_high_unbounded: bool
    market_limit: Optional[float]
    x_cap: float
    accommodation_empty: bool

    @property
    def accommodation(self) -> Optional[Tuple[float, Optional[float]]]:
        """Open interval (x_low, x_high); x_high is None when unbounded."""
        if self.accommodation_empty:
            return None
        return self.x_low, (None if self.x_high_unbounded else self.x_high)

    @property
    def domain_upper(self) -> float:
        """Right end of the output domain covered by the deterrence set."""
        if self.market_limit is None:
            return self.x_cap
        return max(self.x_cap, self.market_limit)

    def in_accommodation(self, X: float) -> bool:
        if self.accommodation_empty:
            return False
        if X <= self.x_low:
            return False
        return self.x_high_unbounded or X < self.x_high

    def in_deterrence(self, X: float) -> bool:
        return X >= 0 and not self.in_accommodation(X)

    def deterrence_intervals(self) -> List[Tuple[float, float]]:
        """Closed intervals whose union is the deterrence set."""
        if self.accommodation_empty:
            return [(0.0, self.domain_upper)]
        intervals = [(0.0, self.x_low)]
        if not self.x_high_unbounded:
            intervals.append((self.x_high, max(self.x_high, self.domain_upper)))
        return intervals


def _stable_quadratic_roots(a: float, b: float, c: float) -> Tuple[float, float]:
    """Roots (small, large) of a*x**2 + b*x + c with b < 0, c >= 0 and a > 0."""
    disc = max(b * b - 4 * a * c, 0.0)
    q = -0.5 * (b - math.sqrt(disc))
    return c / q, q / a


def entry_regions(params: ModelParams, R: float) -> EntryRegions:
    """Split the output domain into accommodation and deterrence for entry cost R."""
    params.require_valid()
    if not R >= 0:
        raise DomainError(f"entry cost must be nonnegative, got {R}", reason="negative_entry_cost")
    if params.is_generic:
        raise DomainError("regions are undefined for a generic entrant", reason="no_rent_entrant")

    theta, phi, beta, margin = params.theta, params.phi, params.beta, params.margin
    market_limit = margin / phi if params.has_cross_resistance else None
    pi_max = max_entrant_profit(params)
    x_tilde = crossover_output(params)
    tol = params.equality_tol * params.profit_scale

    if R > pi_max + tol:
        logger.debug(f"R={R} exceeds maximum entrant profit {pi_max}: entry blockaded everywhere")
        return EntryRegions(R, None, None, False, market_limit, params.x_cap, True)

    if R >= pi_max - tol:
        x_peak = margin / (2 * theta) if params.has_cross_resistance else x_tilde
        return EntryRegions(R, x_peak, x_peak, False, market_limit, params.x_cap, True)

    # pi_1(X) = R  <=>  theta (theta - phi) X**2 - (theta - phi)(alpha - c) X + beta R = 0
    x_low, x_high_first = _stable_quadratic_roots(theta * (theta - phi), -(theta - phi) * margin, beta * R)

    unbounded = False
    if R > monopoly_branch_profit(params, x_tilde):
        x_high = x_high_first
    elif not params.has_cross_resistance:
        x_high = None
        unbounded = True
    else:
        x_high = (margin - 2 * math.sqrt(beta * R)) / phi

    regions = EntryRegions(R, x_low, x_high, unbounded, market_limit, params.x_cap, False)
    logger.debug(f"Entry regions for R={R}: {regions.accommodation}")
    return regions


def entry_decision(params: ModelParams, X: float, R: float) -> EntryDecision:
    """Whether a prospective entrant enters after observing X, given entry cost R.

    Enter exactly when X lies in the open accommodation interval of
    entry_regions, so boundary ties stay out.
    """
    params.require_valid()
    if not R >= 0:
        raise DomainError(f"entry cost must be nonnegative, got {R}", reason="negative_entry_cost")
    if params.is_generic:
        return EntryDecision.INDIFFERENT if R <= params.equality_tol else EntryDecision.STAY_OUT
    require_output(X)
    if entry_regions(params, R).in_accommodation(X):
        return EntryDecision.ENTER
    return EntryDecision.STAY_OUT
