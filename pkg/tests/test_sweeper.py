import asyncio

import pytest

from bounded_credible.coverage import MIN_REPLICATES, coverage_bound
from bounded_credible.errors import SpendingValidationError
from bounded_credible.spending import get_spending_function
from bounded_credible.sweeper import CoverageSweeper, theta_sweep

NODES = 10_000


def _sweep(model, spending_name="equal-tails", **kwargs):
    spending = get_spending_function(spending_name, 0.05, model.pivot)
    options = dict(
        tau_min=0.0,
        tau_max=4.0,
        grid_points=5,
        replicates=MIN_REPLICATES,
        seed=17,
        quadrature_nodes=NODES,
    )
    options.update(kwargs)
    return theta_sweep(model, spending, 0.05, **options)


def test_sweep_passes(get_catalog_model):
    report = _sweep(get_catalog_model("location-normal"))

    assert report.verdict
    assert report.tau_grid == [0.0, 1.0, 2.0, 3.0, 4.0]
    assert report.bound == coverage_bound(0.05)
    assert report.boundary_value == report.estimates[0]
    assert report.grid_spacing == 1.0
    assert len(report.quadrature) == 5
    assert report.min_quadrature > report.bound


def test_sweep_is_reproducible(get_catalog_model):
    model = get_catalog_model("scale-gamma")

    assert _sweep(model) == _sweep(model)


def test_sweep_does_not_depend_on_concurrency(get_catalog_model):
    model = get_catalog_model("location-shifted-exponential")

    serial = _sweep(model, max_concurrency=1)
    parallel = _sweep(model, max_concurrency=8)

    assert serial.estimates == parallel.estimates
    assert serial.quadrature == parallel.quadrature


def test_single_point_sweep(get_catalog_model):
    report = _sweep(get_catalog_model("location-normal"), tau_min=2.0, tau_max=2.0, grid_points=1)

    assert report.tau_grid == [2.0]
    assert report.grid_spacing == 0.0
    assert report.boundary_value is None


def test_sweep_without_constant_scale(get_catalog_model):
    report = _sweep(get_catalog_model("location-scale-normal"), grid_points=3)

    assert report.quadrature is None
    assert report.min_quadrature is None
    assert report.verdict


def test_sweep_can_skip_quadrature(get_catalog_model):
    report = _sweep(get_catalog_model("location-normal"), grid_points=2, quadrature=False)

    assert report.quadrature is None


def test_sweep_refuses_inadmissible_spending(get_catalog_model):
    model = get_catalog_model("location-normal")

    with pytest.raises(SpendingValidationError):
        _sweep(model, spending_name="lower-tailed")


def test_sweeper_in_running_loop(get_catalog_model):
    model = get_catalog_model("location-normal")
    spending = get_spending_function("equal-tails", 0.05, model.pivot)
    sweeper = CoverageSweeper(max_concurrency=2, quadrature_nodes=NODES)

    async def run():
        return await sweeper.sweep(model, spending, 0.05, [0.0, 1.5], MIN_REPLICATES, 17)

    report = asyncio.run(run())

    assert report.seed == 17
    assert report.replicates == MIN_REPLICATES
    assert report.spending == "equal-tails"
