import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from bounded_credible.credible import baseline_bounds, check_alpha, credible_bounds
from bounded_credible.errors import (
    DomainError,
    SpendingValidationError,
    UnsupportedModelError,
)
from bounded_credible.random_streams import point_rng
from bounded_credible.schemas.coverage import CoverageReport
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.spending import SpendingFunction
from bounded_credible.spending import validate_spending

MIN_REPLICATES = 10_000
DEFAULT_QUADRATURE_NODES = 100_000
QUADRATURE_TAIL = 1e-8
STANDARD_ERROR_MARGIN = 3.0

logger = logging.getLogger(__name__)


def coverage_bound(alpha: float) -> float:
    check_alpha(alpha)
    return (1 - alpha) / (1 + alpha)


def boundary_coverage(alpha: float) -> float:
    check_alpha(alpha)
    return 1 / (1 + alpha)


def ensure_admissible(spending: SpendingFunction, model: PivotModel) -> None:
    report = validate_spending(spending, model.pivot)

    if not report.passed:
        raise SpendingValidationError(
            f"{spending.label} is not admissible for {model.pivot.name} "
            f"(first failure at t={report.first_failure}), coverage is not guaranteed"
        )


def _check_spending_alpha(spending: SpendingFunction, alpha: float) -> None:
    check_alpha(alpha)
    if spending.alpha != alpha:
        raise DomainError(
            f"spending {spending.label} was built for alpha={spending.alpha}, not {alpha}"
        )


def _check_tau(tau_value: float) -> None:
    if not tau_value >= 0.0:
        raise DomainError(f"tau must be nonnegative, got {tau_value}")


def simulate_hits(
    model: PivotModel,
    spending: SpendingFunction,
    alpha: float,
    tau_value: float,
    replicates: int,
    rng: np.random.Generator,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Per-replicate indicators (interval contains tau, t(x) <= y0) for
    `replicates` observations drawn at theta_from_tau(tau_value).
    """
    theta = model.theta_from_tau(tau_value)
    x = model.sample(theta, rng, replicates)

    a1 = model.a1(x)
    a2 = model.a2(x)
    t = a1 / a2

    lower, upper = credible_bounds(a1, a2, alpha, spending(t), model.pivot)
    target = model.tau(theta)

    hits = (lower <= target) & (target <= upper)
    at_or_below_y0 = t <= spending.y0

    return hits, at_or_below_y0


def coverage_mc(
    model: PivotModel,
    spending: SpendingFunction,
    alpha: float,
    tau_value: float,
    replicates: int,
    seed: int,
    stream_index: int = 0,
    check_admissible: bool = True,
) -> Tuple[float, float]:
    _check_spending_alpha(spending, alpha)
    _check_tau(tau_value)

    if replicates < MIN_REPLICATES:
        raise DomainError(f"need at least {MIN_REPLICATES} replicates, got {replicates}")

    if check_admissible:
        ensure_admissible(spending, model)

    hits, _ = simulate_hits(
        model, spending, alpha, tau_value, replicates, point_rng(seed, stream_index)
    )

    estimate = float(np.mean(hits))
    std_error = float(np.sqrt(estimate * (1 - estimate) / replicates))

    return estimate, std_error


def _quadrature_grid(
    model: PivotModel, tau_value: float, nodes: int
) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    (a1, a2, mass) over midpoints of [1e-8, 1 - 1e-8] in G-probability;
    a1 = tau - c * w with w = G^-1(u) and c the constant a2.
    """
    if not model.constant_a2:
        raise UnsupportedModelError(f"{model.name} has a data-dependent a2, no quadrature")
    if nodes < 1:
        raise DomainError(f"need at least one quadrature node, got {nodes}")

    theta = model.theta_from_tau(tau_value)
    draw = model.sample(theta, np.random.default_rng(0), 1)
    scale = float(model.a2(draw)[0])

    mass = 1.0 - 2 * QUADRATURE_TAIL
    u = QUADRATURE_TAIL + mass * (np.arange(nodes) + 0.5) / nodes
    w = model.pivot.quantile(u)

    a1 = model.tau(theta) - scale * w
    a2 = np.full(nodes, scale)

    return a1, a2, mass


def coverage_quadrature(
    model: PivotModel,
    spending: SpendingFunction,
    alpha: float,
    tau_value: float,
    nodes: int = DEFAULT_QUADRATURE_NODES,
) -> float:
    _check_spending_alpha(spending, alpha)
    _check_tau(tau_value)

    a1, a2, mass = _quadrature_grid(model, tau_value, nodes)
    target = model.tau(model.theta_from_tau(tau_value))

    lower, upper = credible_bounds(a1, a2, alpha, spending(a1 / a2), model.pivot)
    hits = (lower <= target) & (target <= upper)

    return mass * float(np.mean(hits))


def baseline_coverage_quadrature(
    model: PivotModel,
    alpha: float,
    tau_value: float,
    nodes: int = DEFAULT_QUADRATURE_NODES,
    truncated: bool = False,
) -> float:
    """Coverage of the unrestricted interval, or of its truncation to [0, inf)"""
    check_alpha(alpha)
    _check_tau(tau_value)

    a1, a2, mass = _quadrature_grid(model, tau_value, nodes)
    target = model.tau(model.theta_from_tau(tau_value))

    lower, upper = baseline_bounds(a1, a2, alpha, model.pivot, truncated=truncated)
    hits = (lower <= target) & (target <= upper)

    return mass * float(np.mean(hits))


def tau_grid(tau_min: float, tau_max: float, grid_points: int) -> np.ndarray:
    _check_tau(tau_min)

    if grid_points < 1:
        raise DomainError(f"need at least one grid point, got {grid_points}")
    if grid_points == 1:
        return np.array([tau_min])
    if not tau_max > tau_min:
        raise DomainError(f"tau_max {tau_max} must exceed tau_min {tau_min}")

    return np.linspace(tau_min, tau_max, grid_points)


def build_report(
    model: PivotModel,
    spending: SpendingFunction,
    alpha: float,
    grid: Sequence[float],
    mc_results: Sequence[Tuple[float, float]],
    quadrature: Optional[Sequence[float]],
    replicates: int,
    seed: int,
) -> CoverageReport:
    bound = coverage_bound(alpha)
    estimates = [estimate for estimate, _ in mc_results]
    std_errors = [std_error for _, std_error in mc_results]

    margins = [
        estimate + STANDARD_ERROR_MARGIN * std_error
        for estimate, std_error in zip(estimates, std_errors)
    ]
    verdict = min(margins) >= bound

    min_quadrature = None
    if quadrature is not None:
        min_quadrature = min(quadrature)
        verdict = verdict and min_quadrature > bound

    grid = [float(value) for value in grid]
    spacing = (grid[-1] - grid[0]) / (len(grid) - 1) if len(grid) > 1 else 0.0
    boundary_value = estimates[0] if grid[0] == 0.0 else None

    if not verdict:
        logger.warning(
            f"{model.name} with {spending.label} at alpha={alpha} falls below {bound:.6f}"
        )

    return CoverageReport(
        model=model.name,
        spending=spending.label,
        alpha=alpha,
        tau_grid=grid,
        estimates=estimates,
        std_errors=std_errors,
        quadrature=None if quadrature is None else list(quadrature),
        min_coverage=min(estimates),
        min_quadrature=min_quadrature,
        bound=bound,
        boundary_value=boundary_value,
        grid_spacing=spacing,
        verdict=verdict,
        replicates=replicates,
        seed=seed,
    )
