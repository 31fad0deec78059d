"""Command-line interface for the entry deterrence model."""

import functools
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

import click
import numpy as np
from pydantic import ValidationError

from entrydeterrence.entry.entrant_profit import max_entrant_profit
from entrydeterrence.equilibrium_solver import EquilibriumSolver
from entrydeterrence.errors import ConfigError, DomainError, GridError, InvalidParametersError
from entrydeterrence.model.params import ModelParams
from entrydeterrence.oracle.brute_force import oracle_regime_map, oracle_subgame_profit
from entrydeterrence.oracle.grid import OracleReport
from entrydeterrence.policy.run_config import RunConfig
from entrydeterrence.reporting.figure_data import FIGURE_COLUMNS, figure_records
from entrydeterrence.reporting.record_writer import CHECK_COLUMNS, SOLVE_COLUMNS, RecordWriter, format_number

EXIT_VALIDATION = 2
EXIT_ORACLE_FAILURE = 3

logger = logging.getLogger("entrydeterrence")


class UsageFailure(click.ClickException):
    """Invalid parameters, ranges, grids or config files."""

    exit_code = EXIT_VALIDATION


class OracleFailure(click.ClickException):
    """At least one brute-force check disagreed with the closed forms."""

    exit_code = EXIT_ORACLE_FAILURE


def setup_logging(verbose: bool = False) -> None:
    """Configure logging for the application; records go to stderr."""
    log_level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def model_options(func: Callable) -> Callable:
    """Options shared by every subcommand."""
    options = [
        click.option("--alpha", type=float, help="Demand intercept"),
        click.option("--beta", type=float, help="Demand slope"),
        click.option("--theta", type=float, help="Own-resistance of the incumbent drug"),
        click.option("--phi", type=float, help="Cross-resistance of the entrant drug"),
        click.option("--cost", "c", type=float, help="Marginal cost"),
        click.option("--entry-cost", type=float, help="Fixed entry cost R"),
        click.option("--entry-cost-range", help="Entry cost range LO:HI:STEP"),
        click.option("--sweep-phi", help="Cross-resistance range LO:HI:STEP"),
        click.option("--sweep-theta", help="Own-resistance range LO:HI:STEP"),
        click.option("--format", "output_format", type=click.Choice(["csv", "jsonl"]), help="Record format"),
        click.option("--out", "output_path", type=click.Path(dir_okay=False), help="Output file (default stdout)"),
        click.option("--price-step", type=float, help="Oracle price grid step"),
        click.option("--output-step", type=float, help="Oracle output grid step"),
        click.option("--config", "-c", "config_path", help="Path to configuration file"),
        click.option("--verbose", "-v", is_flag=True, help="Enable verbose output"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _handle_errors(func: Callable) -> Callable:
    """Map package and validation errors onto exit codes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ValidationError, InvalidParametersError, ConfigError, GridError, DomainError, ValueError) as e:
            logger.error(f"{type(e).__name__}: {e}")
            raise UsageFailure(str(e)) from e

    return wrapper


def load_run_config(config_path: Optional[str], verbose: bool, **overrides: Any) -> RunConfig:
    setup_logging(verbose)
    config = RunConfig.from_sources(config_path, overrides)
    logger.info(f"Run configuration: {config.model_dump(exclude_none=True)}")
    return config


@click.group()
@click.version_option(package_name="entrydeterrence")
def main():
    """Entry deterrence with antibiotic resistance under Bertrand competition."""


@main.command()
@model_options
@_handle_errors
def solve(config_path: Optional[str], verbose: bool, **overrides: Any):
    """Solve the equilibrium for a single entry cost."""
    explicit_format = overrides.get("output_format") is not None
    config = load_run_config(config_path, verbose, **overrides)
    params = config.model_params().require_valid()
    outcome = EquilibriumSolver(params).solve(config.entry_cost)

    writer = RecordWriter(config.output_format, config.output_path)
    if explicit_format:
        writer.write([outcome.get_report()])
        return
    writer.write_text(_solve_text(outcome.get_report()))


def _solve_text(report: Dict[str, Any]) -> str:
    width = max(len(key) for key in report)
    return "".join(f"{key.ljust(width)}  {format_number(value)}\n" for key, value in report.items())


@main.command()
@model_options
@_handle_errors
def sweep(config_path: Optional[str], verbose: bool, **overrides: Any):
    """Solve over a grid of entry costs and, optionally, one resistance axis."""
    config = load_run_config(config_path, verbose, **overrides)
    entry_costs = config.entry_costs()

    records = []
    for theta, phi in config.axis_points():
        params = config.model_params(theta=theta, phi=phi).require_valid()
        solver = EquilibriumSolver(params)
        outcomes = solver.run(entry_costs)
        onset = solver.regime_onset(outcomes, outcomes[-1].regime)
        logger.info(f"theta={theta:.9g} phi={phi:.9g}: final regime {outcomes[-1].regime.value} from R={onset}")
        records.extend(outcome.get_report() for outcome in outcomes)

    RecordWriter(config.output_format, config.output_path).write(records, SOLVE_COLUMNS)


@main.command()
@model_options
@_handle_errors
def figure(config_path: Optional[str], verbose: bool, **overrides: Any):
    """Emit curve samples and markers for the deterrence figure."""
    config = load_run_config(config_path, verbose, **overrides)
    params = config.model_params().require_valid()
    rows = figure_records(params, config.entry_cost, config.figure_samples, config.figure_x_max)
    RecordWriter(config.output_format, config.output_path).write(rows, FIGURE_COLUMNS)


def check_entry_costs(
    config: RunConfig, params: ModelParams, explicit_cost: Optional[float] = None
) -> List[float]:
    """Entry costs for the equilibrium oracle: the configured range, or an even grid up to 1.2 pi_max.

    An entry cost given on the command line is appended to a configured range if missing.
    """
    if config.entry_cost_range is not None:
        costs = config.entry_cost_range.values()
        if explicit_cost is not None and explicit_cost not in costs:
            costs.append(explicit_cost)
        return costs
    upper = 1.2 * max_entrant_profit(params)
    if upper <= 0:
        upper = params.profit_scale / 4
    return [float(r) for r in np.linspace(0.0, upper, config.check_r_points)]


def check_outputs(config: RunConfig, params: ModelParams) -> List[float]:
    """Evenly spaced first-period outputs over (0, alpha/beta]."""
    return [params.x_cap * i / config.check_x_points for i in range(1, config.check_x_points + 1)]


@main.command()
@model_options
@_handle_errors
def check(config_path: Optional[str], verbose: bool, **overrides: Any):
    """Compare closed forms against brute-force grid searches."""
    config = load_run_config(config_path, verbose, **overrides)
    params = config.model_params().require_valid()
    grid = config.grid_spec(params)
    logger.info(f"Oracle grid: {grid}")

    reports: List[OracleReport] = [oracle_subgame_profit(params, X, grid) for X in check_outputs(config, params)]
    reports.extend(oracle_regime_map(params, check_entry_costs(config, params, overrides.get("entry_cost")), grid))
    RecordWriter(config.output_format, config.output_path).write(
        [report.get_report() for report in reports], CHECK_COLUMNS
    )

    failures = [report for report in reports if not report.passed]
    if failures:
        first = failures[0].get_report()
        raise OracleFailure(f"{len(failures)} of {len(reports)} checks failed; first failure: {first}")
    logger.info(f"All {len(reports)} oracle checks passed")


if __name__ == "__main__":
    main()
