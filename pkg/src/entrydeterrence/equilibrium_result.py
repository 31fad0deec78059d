"""Result types for the subgame perfect equilibrium solver."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, NamedTuple, Optional, Tuple, Union

from entrydeterrence.model.benchmark import DerivedConstants, MonopolyPricing
from entrydeterrence.model.params import ModelParams
from entrydeterrence.subgame.bertrand import PricingOutcome


class Regime(str, Enum):
    BLOCKADED = "Blockaded"
    DETERRED = "Deterred"
    ACCOMMODATED = "Accommodated"
    GENERIC_NO_ENTRY = "GenericNoEntry"
    GENERIC_INDIFFERENT = "GenericIndifferent"


class Optimum(NamedTuple):
    """Best first-period output within a region and the profit it earns.

    ``attained`` is False when the region is open at the optimum, so the
    reported profit is a supremum.
    """

    x: float
    profit: float
    attained: bool = True


@dataclass(frozen=True)
class StrategyComparison:
    """Incumbent's best accommodation and best deterrence payoffs for one entry cost.

    ``accommodation`` is None when no output lets the entrant in. The
    advantage is then the deterrence payoff itself.
    """

    entry_cost: float
    accommodation: Optional[Optimum]
    deterrence: Optimum
    blockaded: bool

    @property
    def pi_a_star(self) -> Optional[float]:
        return None if self.accommodation is None else self.accommodation.profit

    @property
    def pi_d_star(self) -> float:
        return self.deterrence.profit

    @property
    def accommodation_feasible(self) -> bool:
        return self.accommodation is not None

    @property
    def advantage(self) -> float:
        if self.accommodation is None:
            return self.deterrence.profit
        return self.deterrence.profit - self.accommodation.profit


@dataclass
class EquilibriumOutcome:
    """Summary of the subgame perfect equilibrium for one parameter set and entry cost."""

    params: ModelParams
    entry_cost: float
    regime: Regime
    x_star: float
    entry: bool
    profit_period1: float
    profit_period2_incumbent: float
    pricing: Union[PricingOutcome, MonopolyPricing]
    comparison: StrategyComparison
    constants: DerivedConstants
    alternative_x_star: Optional[float] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def total_incumbent(self) -> float:
        return self.profit_period1 + self.profit_period2_incumbent

    @property
    def profit_advantage(self) -> float:
        return self.comparison.advantage

    def get_report(self) -> Dict[str, Any]:
        """Flat record of the outcome; input fields first, then results."""
        report: Dict[str, Any] = dict(self.params.as_dict())
        report["R"] = self.entry_cost
        report.update(
            {
                "regime": self.regime.value,
                "x_star": self.x_star,
                "entry": self.entry,
                "profit_p1": self.profit_period1,
                "profit_p2": self.profit_period2_incumbent,
                "total": self.total_incumbent,
                "pi_A_star": self.comparison.pi_a_star,
                "pi_D_star": self.comparison.pi_d_star,
                "advantage": self.profit_advantage,
                "accommodation_attained": (
                    None if self.comparison.accommodation is None else self.comparison.accommodation.attained
                ),
                "alternative_x_star": self.alternative_x_star,
                "pricing_regime": self.pricing.regime if isinstance(self.pricing, MonopolyPricing) else self.pricing.regime.value,
            }
        )
        if isinstance(self.pricing, PricingOutcome):
            report.update(
                {
                    "p_incumbent": self.pricing.p_incumbent,
                    "p_entrant": self.pricing.p_entrant,
                    "q_incumbent": self.pricing.q_incumbent,
                    "q_entrant": self.pricing.q_entrant,
                    "profit_entrant": self.pricing.profit_entrant,
                }
            )
        else:
            report.update(
                {
                    "p_incumbent": self.pricing.price,
                    "p_entrant": None,
                    "q_incumbent": self.pricing.quantity,
                    "q_entrant": 0.0,
                    "profit_entrant": 0.0,
                }
            )
        report.update(
            {
                "x_static": self.constants.x_static,
                "x_monopoly": self.constants.x_monopoly,
                "x_tilde": self.constants.x_tilde,
                "x_entrant_peak": self.constants.x_entrant_peak,
                "pi_e_max": self.constants.pi_e_max,
                "r_bar": self.constants.r_bar,
                "notes": "; ".join(self.notes),
            }
        )
        return report

    @property
    def summary(self) -> str:
        """Human-readable summary of the equilibrium."""
        entry = "enters" if self.entry else "stays out"
        return (
            f"{self.regime.value}: X* = {self.x_star:.9g}, entrant {entry}, "
            f"incumbent profit {self.profit_period1:.9g} + {self.profit_period2_incumbent:.9g} "
            f"= {self.total_incumbent:.9g}, deterrence advantage {self.profit_advantage:.9g}"
        )
