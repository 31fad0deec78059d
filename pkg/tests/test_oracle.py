"""Tests for the brute-force oracle."""

import math
import unittest
from unittest.mock import patch

import numpy as np

from entrydeterrence.entry.entrant_profit import max_entrant_profit
from entrydeterrence.equilibrium_result import Regime
from entrydeterrence.errors import GridError
from entrydeterrence.model.benchmark import derived_constants, two_period_monopoly_profit
from entrydeterrence.model.params import ModelParams
from entrydeterrence.oracle.brute_force import (
    best_entrant_price,
    oracle_regime_map,
    oracle_spne,
    oracle_subgame_profit,
    worst_subgame_discrepancy,
)
from entrydeterrence.oracle.grid import GridSpec, OracleReport
from param_draws import FIGURE_PARAMS, draw_many


class TestGridSpec(unittest.TestCase):
    """Test cases for GridSpec."""

    def test_defaults_scale_with_market(self):
        grid = GridSpec.default_for(FIGURE_PARAMS)
        self.assertAlmostEqual(grid.price_step, 8e-3, places=15)
        self.assertAlmostEqual(grid.output_step, 5e-3, places=15)
        self.assertEqual(grid.x_max, 5.0)

    def test_explicit_steps_win(self):
        grid = GridSpec.default_for(FIGURE_PARAMS, price_step=0.01, output_step=0.02)
        self.assertEqual((grid.price_step, grid.output_step), (0.01, 0.02))

    def test_degenerate_grid(self):
        for kwargs in ({"price_step": 0}, {"output_step": -1}, {"x_max": float("nan")}):
            with self.assertRaises(GridError):
                GridSpec.default_for(FIGURE_PARAMS, **kwargs)

    def test_outputs_include_endpoints(self):
        outputs = GridSpec(price_step=0.1, output_step=0.25, x_max=5.0).outputs()
        self.assertEqual(len(outputs), 21)
        self.assertEqual(outputs[0], 0.0)
        self.assertAlmostEqual(outputs[-1], 5.0, places=12)

    def test_halved(self):
        grid = GridSpec(price_step=0.1, output_step=0.2, x_max=5.0).halved()
        self.assertEqual((grid.price_step, grid.output_step, grid.x_max), (0.05, 0.1, 5.0))


class TestOracleReport(unittest.TestCase):
    """Test cases for OracleReport."""

    def test_pass_requires_tolerance_and_checks(self):
        report = OracleReport("x", 1.0, 1.0005, 5e-4, 1e-3)
        self.assertTrue(report.passed)
        self.assertFalse(OracleReport("x", 1.0, 1.01, 1e-2, 1e-3).passed)
        self.assertFalse(OracleReport("x", 1.0, 1.0, 0.0, 1e-3, checks={"regime": False}).passed)

    def test_report_record(self):
        record = OracleReport("x", 1.0, 1.0, 0.0, 1e-3, details={"regime_closed_form": "Deterred"}).get_report()
        self.assertEqual(record["status"], "pass")
        self.assertEqual(record["regime_closed_form"], "Deterred")


class TestSubgameOracle(unittest.TestCase):
    """Test cases for the price best-response oracle."""

    def setUp(self):
        """Set up test environment."""
        self.grid = GridSpec.default_for(FIGURE_PARAMS)

    def test_peak(self):
        report = oracle_subgame_profit(FIGURE_PARAMS, 2, self.grid)
        self.assertEqual(report.closed_form_value, 6.0)
        self.assertLessEqual(report.discrepancy, 5e-3)
        self.assertTrue(report.passed)

    def test_crossover(self):
        report = oracle_subgame_profit(FIGURE_PARAMS, 16 / 7, self.grid)
        self.assertAlmostEqual(report.brute_force_value, 5.87755, places=2)
        self.assertTrue(report.passed)

    def test_no_first_period_use(self):
        report = oracle_subgame_profit(FIGURE_PARAMS, 0, self.grid)
        self.assertEqual(report.closed_form_value, 0.0)
        self.assertEqual(report.brute_force_value, 0.0)
        self.assertTrue(report.passed)

    def test_tolerance_depends_on_demand_only(self):
        report = oracle_subgame_profit(FIGURE_PARAMS, 2, self.grid)
        # Entrant demand intercept alpha - phi*X = 9 caps the quantity at (9 - c)/beta = 3.5
        expected = 5 * self.grid.price_step * 3.5 + FIGURE_PARAMS.profit_tolerance
        self.assertAlmostEqual(report.tolerance_used, expected, places=12)

    @patch("entrydeterrence.oracle.brute_force.entrant_gross_profit")
    def test_wrong_closed_form_fails(self, mock_profit):
        mock_profit.return_value = 7.0
        report = oracle_subgame_profit(FIGURE_PARAMS, 2, self.grid)
        self.assertAlmostEqual(report.discrepancy, 1.0, delta=5e-3)
        self.assertLess(report.tolerance_used, 0.2)
        self.assertFalse(report.passed)

    def test_best_price_never_below_cost(self):
        _, price, quantity = best_entrant_price(FIGURE_PARAMS, 1, self.grid)
        self.assertGreaterEqual(price, FIGURE_PARAMS.c)
        self.assertLessEqual(price, 3.5)
        self.assertGreater(quantity, 0)

    def test_random_draws_within_tolerance(self):
        for params in draw_many(200, seed=23):
            grid = GridSpec.default_for(params)
            for X in np.linspace(params.x_cap / 100, params.x_cap, 100):
                report = oracle_subgame_profit(params, X, grid)
                self.assertTrue(report.passed, report.get_report())

    def test_first_order_convergence(self):
        draws = draw_many(10, seed=29)
        coarse, fine = 0.0, 0.0
        for params in draws:
            grid = GridSpec.default_for(params, price_step_factor=1e-2)
            outputs = np.linspace(params.x_cap / 200, params.x_cap, 200)
            coarse = max(coarse, worst_subgame_discrepancy(params, outputs, grid))
            fine = max(fine, worst_subgame_discrepancy(params, outputs, grid.halved()))
        # The halved grid keeps every coarse price, so a point already near a coarse price gains nothing
        self.assertLessEqual(fine, 0.6 * coarse)


class TestEquilibriumOracle(unittest.TestCase):
    """Test cases for the incumbent output search."""

    def setUp(self):
        """Set up test environment."""
        self.grid = GridSpec.default_for(FIGURE_PARAMS)

    def test_deterred(self):
        report = oracle_spne(FIGURE_PARAMS, 5, self.grid)
        self.assertTrue(report.passed, report.get_report())
        self.assertAlmostEqual(report.details["x_brute_force"], (6 - math.sqrt(6)) / 3, delta=2 * self.grid.output_step)
        self.assertEqual(report.details["regime_brute_force"], "Deterred")

    def test_blockaded(self):
        report = oracle_spne(FIGURE_PARAMS, 6, self.grid)
        self.assertTrue(report.passed, report.get_report())
        self.assertAlmostEqual(report.details["x_brute_force"], 4 / 3, delta=2 * self.grid.output_step)

    def test_accommodated(self):
        report = oracle_spne(FIGURE_PARAMS, 0, self.grid)
        self.assertTrue(report.passed, report.get_report())
        self.assertAlmostEqual(report.details["x_brute_force"], 2.0, delta=2 * self.grid.output_step)
        self.assertEqual(report.details["regime_brute_force"], "Accommodated")

    def test_blockade_transition(self):
        reports = oracle_regime_map(FIGURE_PARAMS, [5.333, 16 / 3, 5.334], self.grid)
        self.assertEqual(
            [r.details["regime_brute_force"] for r in reports],
            [Regime.DETERRED.value, Regime.BLOCKADED.value, Regime.BLOCKADED.value],
        )
        self.assertTrue(all(r.passed for r in reports))

    def test_regime_flips_once_around_threshold(self):
        for params in draw_many(20, seed=31):
            r_bar = derived_constants(params).r_bar
            quantum = 1e-6 * params.profit_scale
            costs = [r_bar + k * quantum for k in range(-3, 4)]
            regimes = [r.details["regime_brute_force"] for r in oracle_regime_map(params, costs, GridSpec.default_for(params))]
            flips = sum(a != b for a, b in zip(regimes, regimes[1:]))
            self.assertEqual(flips, 1)
            self.assertEqual(regimes[0], Regime.DETERRED.value)
            self.assertEqual(regimes[-1], Regime.BLOCKADED.value)

    def test_generic_entrant(self):
        params = ModelParams(alpha=10, beta=2, theta=1, phi=1, c=2)
        reports = oracle_regime_map(params, [0.0, 1.0], GridSpec.default_for(params))
        self.assertTrue(all(r.passed for r in reports))
        self.assertEqual(reports[1].details["regime_brute_force"], Regime.GENERIC_NO_ENTRY.value)

    def test_monopoly_grid_argmax(self):
        for params in draw_many(500, seed=37):
            grid = GridSpec.default_for(params)
            xs = grid.outputs()
            values = [two_period_monopoly_profit(params, x) for x in xs[::10]]
            coarse_step = 10 * grid.output_step
            x_best = xs[::10][int(np.argmax(values))]
            self.assertLessEqual(abs(x_best - derived_constants(params).x_monopoly), coarse_step)

    def test_agrees_with_solver_on_random_draws(self):
        for params in draw_many(200, seed=41):
            grid = GridSpec.default_for(params)
            r_values = np.linspace(0.0, 1.2 * max_entrant_profit(params), 121)
            for report in oracle_regime_map(params, r_values, grid):
                self.assertTrue(report.passed, report.get_report())


if __name__ == "__main__":
    unittest.main()
