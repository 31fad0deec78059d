"""Sampled profit curves and landmark points for the deterrence figure."""

import logging
from typing import Any, Dict, List, Optional

import numpy as np

from entrydeterrence.entry.entrant_profit import entrant_gross_profit_curve, entrant_profit_peak
from entrydeterrence.entry.regions import entry_regions
from entrydeterrence.equilibrium_solver import deterrence_optimum
from entrydeterrence.model.benchmark import (
    derived_constants,
    is_feasible_output,
    period1_profit,
    two_period_monopoly_profit,
)
from entrydeterrence.model.params import ModelParams

logger = logging.getLogger("entrydeterrence.reporting")

FIGURE_COLUMNS = ("record", "label", "x", "y")


def sample_outputs(params: ModelParams, samples: int = 21, x_max: Optional[float] = None) -> np.ndarray:
    """Evenly spaced outputs over [0, x_max], x_max defaulting to alpha/beta."""
    x_max = params.x_cap if x_max is None else x_max
    return np.linspace(0.0, x_max, samples)


def _row(record: str, label: str, x: Optional[float], y: float) -> Dict[str, Any]:
    return {"record": record, "label": label, "x": None if x is None else float(x), "y": float(y)}


def figure_records(
    params: ModelParams, R: float, samples: int = 21, x_max: Optional[float] = None
) -> List[Dict[str, Any]]:
    """Curve samples for pi_E, Pi_D and Pi_A, the entry cost level, then markers.

    Markers always include the no-threat monopoly optimum X_M* and the
    static optimum X_S*; region markers need a differentiated entrant.
    """
    params.require_valid()
    xs = sample_outputs(params, samples, x_max)
    infeasible = sum(not is_feasible_output(params, x) for x in xs)
    if infeasible:
        logger.warning(
            f"{infeasible} sample(s) lie beyond alpha/beta={params.x_cap:.9g}, where the first-period price is negative"
        )
    curves = {
        "pi_E": entrant_gross_profit_curve(params, xs),
        "Pi_D": np.array([two_period_monopoly_profit(params, x) for x in xs]),
        "Pi_A": np.array([period1_profit(params, x) for x in xs]),
    }

    rows = []
    for label, values in curves.items():
        rows.extend(_row("curve", label, x, y) for x, y in zip(xs, values))
    rows.append(_row("level", "entry_cost", None, R))

    constants = derived_constants(params)
    regions = None
    if params.is_generic:
        logger.info("Generic entrant earns no rent; skipping entry region markers")
    else:
        regions = entry_regions(params, R)
        if not regions.accommodation_empty:
            rows.append(_row("marker", "x_low", regions.x_low, R))
            if not regions.x_high_unbounded:
                rows.append(_row("marker", "x_high", regions.x_high, R))
        rows.append(_row("marker", "entrant_peak", *entrant_profit_peak(params).as_tuple()))
        deterrence = deterrence_optimum(params, R)
        rows.append(_row("marker", "deterrence_optimum", deterrence.x, deterrence.profit))

    x_monopoly = constants.x_monopoly
    rows.append(_row("marker", "monopoly_optimum", x_monopoly, two_period_monopoly_profit(params, x_monopoly)))
    rows.append(_row("marker", "static_optimum", constants.x_static, period1_profit(params, constants.x_static)))
    if regions is not None and not regions.accommodation_empty and not regions.x_high_unbounded:
        rows.append(_row("marker", "accommodation_boundary", regions.x_high, period1_profit(params, regions.x_high)))
    logger.debug(f"Built {len(rows)} figure rows for R={R}")
    return rows
