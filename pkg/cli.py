import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict

import click
import numpy as np
from pydantic import ValidationError

from bounded_credible.concurrency import coro
from bounded_credible.config import config_hash, load_run_config, resolve_output_path
from bounded_credible.coverage import tau_grid
from bounded_credible.credible import bounds_from_spending, delta0
from bounded_credible.errors import (
    BoundedCredibleError,
    DomainError,
    UnknownModelError,
    UnknownSpendingError,
    UnsupportedModelError,
)
from bounded_credible.export import (
    open_output,
    write_coverage_report,
    write_interval,
    write_validation_report,
)
from bounded_credible.models import MODEL_NAMES, get_model
from bounded_credible.schemas.config import Command, RunConfig
from bounded_credible.spending import (
    SPENDING_NAMES,
    get_spending_function,
    validate_spending,
    validation_grid,
)
from bounded_credible.sweeper import CoverageSweeper

logging.basicConfig(stream=sys.stderr, level=logging.INFO)
logger = logging.getLogger(__name__)

USAGE_ERRORS = (
    DomainError,
    UnknownModelError,
    UnknownSpendingError,
    UnsupportedModelError,
    ValidationError,
)


@contextmanager
def _exit_on_errors():
    try:
        yield
    except USAGE_ERRORS as e:
        raise click.UsageError(str(e))
    except BoundedCredibleError as e:
        raise click.ClickException(str(e))


def model_options(f):
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False)),
        click.option("--model", type=click.Choice(MODEL_NAMES)),
        click.option("--alpha", type=float),
        click.option("--spending", type=click.Choice(SPENDING_NAMES)),
        click.option("--band-weight", type=float, help="lambda for band-mix spending"),
        click.option("--shape", type=float),
        click.option("--shapes", type=str, help="comma separated, e.g. 2,1"),
        click.option("--a", type=float, help="lower bound offset or scale bound"),
        click.option("--n", type=int),
        click.option("--eta", type=float),
        click.option("--weights", type=str, help="comma separated, e.g. 1,-1"),
        click.option("--component", type=str),
        click.option("--output", type=click.Path(dir_okay=False)),
        click.option("--format", "format", type=click.Choice(["csv", "tsv"])),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _load_config(command: Command, flags: Dict[str, Any]) -> RunConfig:
    config_path = flags.pop("config_path", None)
    return load_run_config(config_path, command=command.value, **flags)


@click.group()
def cli():
    pass


@cli.command("interval")
@model_options
@click.option("--x", type=str, help="observation, comma separated when multivariate")
def interval_command(**flags):
    with _exit_on_errors():
        config = _load_config(Command.interval, flags)
        model = get_model(config.model, config.model_params())
        G = model.pivot

        observation = model.check_observation(np.asarray(config.x, dtype=float))

        a1 = float(model.a1(observation)[0])
        a2 = float(model.a2(observation)[0])
        t = a1 / a2

        spending = get_spending_function(
            config.spending, config.alpha, G, band_weight=config.band_weight
        )
        alpha_x = float(spending(t))
        interval = bounds_from_spending(a1, a2, config.alpha, alpha_x, G)
        d0 = delta0(t, config.alpha, G)

        values = (interval.lower, interval.upper, alpha_x, t, spending.y0, d0)
        for label, value in zip(("lower", "upper", "alpha_x", "t", "y0", "delta0"), values):
            click.echo(f"{label}={value:.12g}")

        output_path = resolve_output_path(config)
        with open_output(output_path) as stream:
            write_interval(
                stream,
                values,
                config_hash(config),
                delimiter=config.format.delimiter,
                with_header=output_path is not None,
            )


@cli.command("coverage")
@model_options
@click.option("--tau-min", type=float)
@click.option("--tau-max", type=float)
@click.option("--grid", type=int, help="number of tau grid points")
@click.option("--reps", type=int, help="Monte Carlo replicates per grid point")
@click.option("--seed", type=int)
@click.option(
    "--max-concurrency", type=int, help="maximum number of grid points evaluated at once"
)
@click.option("--quadrature-nodes", type=int)
@coro
async def coverage_command(**flags):
    with _exit_on_errors():
        config = _load_config(Command.coverage, flags)
        model = get_model(config.model, config.model_params())
        spending = get_spending_function(
            config.spending, config.alpha, model.pivot, band_weight=config.band_weight
        )
        grid = tau_grid(config.tau_min, config.tau_max, config.grid)

        sweeper = CoverageSweeper(
            max_concurrency=config.max_concurrency,
            quadrature_nodes=config.quadrature_nodes,
        )
        report = await sweeper.sweep(
            model, spending, config.alpha, grid, config.reps, config.seed
        )

        with open_output(resolve_output_path(config)) as stream:
            write_coverage_report(
                stream, report, config_hash(config), delimiter=config.format.delimiter
            )

    logger.info(
        f"min coverage {report.min_coverage:.6f} against bound {report.bound:.6f}: {report.verdict_label}"
    )
    if not report.verdict:
        click.get_current_context().exit(1)


@cli.command("validate")
@model_options
@click.option("--grid", type=int, help="number of t grid points around y0")
def validate_command(**flags):
    with _exit_on_errors():
        config = _load_config(Command.validate, flags)
        model = get_model(config.model, config.model_params())
        spending = get_spending_function(
            config.spending, config.alpha, model.pivot, band_weight=config.band_weight
        )

        report = validate_spending(
            spending, model.pivot, validation_grid(spending.y0, config.grid)
        )

        with open_output(resolve_output_path(config)) as stream:
            write_validation_report(
                stream, report, config_hash(config), delimiter=config.format.delimiter
            )

    if not report.passed:
        click.get_current_context().exit(1)


if __name__ == "__main__":
    cli()
