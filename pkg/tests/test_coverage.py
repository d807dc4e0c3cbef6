import numpy as np
import pytest

from bounded_credible.coverage import (
    MIN_REPLICATES,
    baseline_coverage_quadrature,
    boundary_coverage,
    build_report,
    coverage_bound,
    coverage_mc,
    coverage_quadrature,
    simulate_hits,
    tau_grid,
)
from bounded_credible.errors import (
    DomainError,
    SpendingValidationError,
    UnsupportedModelError,
)
from bounded_credible.random_streams import point_rng
from bounded_credible.spending import get_spending_function

from .helpers import CONSTANT_SCALE_MODELS

# boundary checks run at 1e5 replicates rather than 1e6, so their tolerance is 3 standard errors
REPLICATES = 100_000
NODES = 20_000
QUADRATURE_ERROR = 1e-4

CERTIFIED_MODELS = [
    "location-normal",
    "location-shifted-exponential",
    "scale-gamma",
    "scale-exponential",
]
CERTIFIED_SPENDINGS = ["equal-tails", "band-lower", "band-upper"]
CERTIFIED_ALPHAS = [0.05, 0.1, 0.32]
CERTIFIED_TAUS = np.linspace(0.0, 5.0, 51)


def _equal_tails(model, alpha=0.05):
    return get_spending_function("equal-tails", alpha, model.pivot)


def test_coverage_bound():
    assert coverage_bound(0.05) == pytest.approx(19 / 21, abs=1e-15)
    assert boundary_coverage(0.05) == pytest.approx(1 / 1.05, abs=1e-15)

    with pytest.raises(DomainError):
        coverage_bound(0.0)


@pytest.mark.parametrize("name", CONSTANT_SCALE_MODELS)
def test_boundary_quadrature(get_catalog_model, name):
    model = get_catalog_model(name)

    coverage = coverage_quadrature(model, _equal_tails(model), 0.05, 0.0, nodes=NODES)

    assert coverage == pytest.approx(1 / 1.05, abs=QUADRATURE_ERROR)


@pytest.mark.parametrize("name", CONSTANT_SCALE_MODELS + ["location-scale-normal"])
def test_boundary_monte_carlo(get_catalog_model, name):
    model = get_catalog_model(name)

    estimate, std_error = coverage_mc(model, _equal_tails(model), 0.05, 0.0, REPLICATES, seed=1)

    assert std_error > 0
    assert abs(estimate - 1 / 1.05) <= 3 * std_error


def test_boundary_hits_are_draws_below_y0(get_catalog_model):
    model = get_catalog_model("location-normal")

    hits, at_or_below_y0 = simulate_hits(
        model, _equal_tails(model), 0.05, 0.0, REPLICATES, point_rng(7, 0)
    )

    assert np.array_equal(hits, at_or_below_y0)


@pytest.mark.parametrize(
    "name", ["location-normal", "location-shifted-exponential", "scale-gamma", "scale-ratio"]
)
def test_monte_carlo_agrees_with_quadrature(get_catalog_model, name):
    model = get_catalog_model(name)
    spending = _equal_tails(model)

    estimate, std_error = coverage_mc(model, spending, 0.05, 3.0, REPLICATES, seed=11)
    quadrature = coverage_quadrature(model, spending, 0.05, 3.0, nodes=NODES)

    assert abs(estimate - quadrature) <= 4 * std_error + QUADRATURE_ERROR


def test_monte_carlo_is_reproducible(get_catalog_model):
    model = get_catalog_model("scale-gamma")
    spending = _equal_tails(model)

    first = coverage_mc(model, spending, 0.05, 1.0, MIN_REPLICATES, seed=5, stream_index=2)
    second = coverage_mc(model, spending, 0.05, 1.0, MIN_REPLICATES, seed=5, stream_index=2)

    assert first == second

    hits, _ = simulate_hits(model, spending, 0.05, 1.0, 1000, point_rng(5, 2))
    other_hits, _ = simulate_hits(model, spending, 0.05, 1.0, 1000, point_rng(5, 3))
    assert not np.array_equal(hits, other_hits)


@pytest.mark.parametrize("name", CONSTANT_SCALE_MODELS)
@pytest.mark.parametrize("tau", [0.0, 0.5, 1.0, 3.0, 10.0])
def test_baseline_quadrature(get_catalog_model, name, tau):
    model = get_catalog_model(name)

    coverage = baseline_coverage_quadrature(model, 0.05, tau, nodes=NODES)

    assert coverage == pytest.approx(0.904762, abs=QUADRATURE_ERROR)


@pytest.mark.parametrize("tau", [0.5, 1.0, 3.0])
def test_truncated_baseline_matches_inside(get_catalog_model, tau):
    model = get_catalog_model("location-normal")

    assert baseline_coverage_quadrature(
        model, 0.05, tau, nodes=NODES, truncated=True
    ) == baseline_coverage_quadrature(model, 0.05, tau, nodes=NODES)


def test_quadrature_needs_constant_scale(get_catalog_model):
    model = get_catalog_model("location-scale-normal")

    with pytest.raises(UnsupportedModelError):
        coverage_quadrature(model, _equal_tails(model), 0.05, 1.0, nodes=NODES)


@pytest.mark.parametrize("name", CERTIFIED_MODELS)
@pytest.mark.parametrize("spending_name", CERTIFIED_SPENDINGS)
@pytest.mark.parametrize("alpha", CERTIFIED_ALPHAS)
def test_coverage_stays_above_bound(get_catalog_model, name, spending_name, alpha):
    model = get_catalog_model(name)
    spending = get_spending_function(spending_name, alpha, model.pivot)
    bound = coverage_bound(alpha)

    coverage = [
        coverage_quadrature(model, spending, alpha, tau, nodes=NODES)
        for tau in CERTIFIED_TAUS
    ]

    assert min(coverage) > bound
    assert coverage[0] == pytest.approx(boundary_coverage(alpha), abs=QUADRATURE_ERROR)


def test_inadmissible_spending_is_refused(get_catalog_model):
    model = get_catalog_model("location-shifted-exponential")
    spending = get_spending_function("posterior-equal-tails", 0.05, model.pivot)

    with pytest.raises(SpendingValidationError):
        coverage_mc(model, spending, 0.05, 1.0, REPLICATES, seed=0)

    estimate, _ = coverage_mc(
        model, spending, 0.05, 1.0, MIN_REPLICATES, seed=0, check_admissible=False
    )
    assert 0.0 <= estimate <= 1.0


def test_monte_carlo_domain(get_catalog_model):
    model = get_catalog_model("location-normal")
    spending = _equal_tails(model)

    with pytest.raises(DomainError):
        coverage_mc(model, spending, 0.05, 1.0, MIN_REPLICATES - 1, seed=0)
    with pytest.raises(DomainError):
        coverage_mc(model, spending, 0.1, 1.0, REPLICATES, seed=0)
    with pytest.raises(DomainError):
        coverage_mc(model, spending, 0.05, -1.0, REPLICATES, seed=0)


def test_tau_grid():
    assert list(tau_grid(0.0, 5.0, 6)) == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]
    assert list(tau_grid(2.0, 2.0, 1)) == [2.0]

    with pytest.raises(DomainError):
        tau_grid(-1.0, 5.0, 6)
    with pytest.raises(DomainError):
        tau_grid(0.0, 5.0, 0)
    with pytest.raises(DomainError):
        tau_grid(3.0, 1.0, 5)


def test_build_report(get_catalog_model):
    model = get_catalog_model("location-normal")
    spending = _equal_tails(model)

    report = build_report(
        model,
        spending,
        0.05,
        [0.0, 1.0, 2.0],
        [(0.952, 0.0007), (0.93, 0.0008), (0.94, 0.0008)],
        [0.9524, 0.931, 0.941],
        100_000,
        3,
    )

    assert report.verdict
    assert report.verdict_label == "pass"
    assert report.min_coverage == 0.93
    assert report.min_quadrature == 0.931
    assert report.boundary_value == 0.952
    assert report.grid_spacing == 1.0
    assert all(point.passed for point in report.points)


def test_build_report_failing_verdict(get_catalog_model):
    model = get_catalog_model("location-normal")
    spending = _equal_tails(model)

    report = build_report(
        model,
        spending,
        0.05,
        [0.5, 1.5],
        [(0.95, 0.0007), (0.5, 0.0016)],
        None,
        100_000,
        3,
    )

    assert not report.verdict
    assert report.verdict_label == "fail"
    assert report.boundary_value is None
    assert report.min_quadrature is None
    assert [point.passed for point in report.points] == [True, False]


def test_build_report_quadrature_below_bound(get_catalog_model):
    model = get_catalog_model("location-normal")

    report = build_report(
        model,
        _equal_tails(model),
        0.05,
        [1.0],
        [(0.95, 0.0007)],
        [0.9],
        100_000,
        0,
    )

    assert not report.verdict
    assert report.grid_spacing == 0.0
