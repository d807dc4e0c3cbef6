import logging
from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np

from bounded_credible.credible import (
    POSTERIOR_DEGENERACY_THRESHOLD,
    check_alpha,
    posterior_normalizer,
    y_boundary,
)
from bounded_credible.errors import (
    DomainError,
    UnknownSpendingError,
    UnsupportedModelError,
)
from bounded_credible.schemas.pivots import PivotDistribution
from bounded_credible.schemas.spending import (
    SpendingFunction,
    SpendingName,
    ValidationPoint,
    ValidationReport,
)

SPENDING_TOLERANCE = 1e-12
DEFAULT_VALIDATION_POINTS = 1001
DEFAULT_BAND_WEIGHT = 0.5

logger = logging.getLogger(__name__)


def _tail_terms(t: np.ndarray, G: PivotDistribution) -> Tuple[np.ndarray, np.ndarray]:
    below = G.cdf(-t)
    normalizer = G.survival(-t)
    # only reached for t far below y0, where every rule returns alpha anyway
    normalizer = np.where(
        normalizer >= POSTERIOR_DEGENERACY_THRESHOLD, normalizer, 1.0
    )
    return below, normalizer


def band_edges(t, alpha: float, G: PivotDistribution) -> Tuple[np.ndarray, np.ndarray]:
    t = np.asarray(t, dtype=float)
    below, normalizer = _tail_terms(t, G)

    band_lo = ((1 - alpha) * below + alpha ** 2 / (1 + alpha)) / normalizer
    band_hi = (alpha / (1 + alpha)) / normalizer

    return band_lo, band_hi


def _equal_tails_rule(t: np.ndarray, alpha: float, G: PivotDistribution, y0: float):
    below, normalizer = _tail_terms(t, G)
    value = np.minimum(alpha, alpha / 2 + below / (2 * normalizer))
    return np.where(t <= y0, alpha, value)


def _band_mix_rule(
    t: np.ndarray, alpha: float, G: PivotDistribution, y0: float, weight: float
):
    band_lo, band_hi = band_edges(t, alpha, G)
    value = np.minimum(alpha, weight * band_lo + (1 - weight) * band_hi)
    return np.where(t <= y0, alpha, value)


def equal_tails_spending(t: float, alpha: float, G: PivotDistribution) -> float:
    check_alpha(alpha)
    posterior_normalizer(t, G)

    y0 = y_boundary(alpha, G)
    return float(_equal_tails_rule(np.asarray(t, dtype=float), alpha, G, y0))


def spending_band(t: float, alpha: float, G: PivotDistribution) -> Tuple[float, float]:
    check_alpha(alpha)
    y0 = y_boundary(alpha, G)

    if t < y0:
        raise DomainError(f"spending band is defined for t >= y0 = {y0}, got t = {t}")

    posterior_normalizer(t, G)
    band_lo, band_hi = band_edges(t, alpha, G)

    return float(band_lo), float(band_hi)


def equal_tails_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    y0 = y_boundary(alpha, G)
    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.equal_tails,
        label=SpendingName.equal_tails.value,
        rule=lambda t: _equal_tails_rule(t, alpha, G, y0),
        y0=y0,
    )


def hpd_symmetric_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    if not (G.symmetric and G.unimodal):
        raise UnsupportedModelError(
            f"hpd-symmetric spending needs a symmetric unimodal pivot, {G.name} is not"
        )

    y0 = y_boundary(alpha, G)
    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.hpd_symmetric,
        label=SpendingName.hpd_symmetric.value,
        rule=lambda t: _equal_tails_rule(t, alpha, G, y0),
        y0=y0,
    )


def band_lower_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    y0 = y_boundary(alpha, G)
    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.band_lower,
        label=SpendingName.band_lower.value,
        rule=lambda t: _band_mix_rule(t, alpha, G, y0, weight=1.0),
        y0=y0,
    )


def band_upper_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    y0 = y_boundary(alpha, G)
    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.band_upper,
        label=SpendingName.band_upper.value,
        rule=lambda t: _band_mix_rule(t, alpha, G, y0, weight=0.0),
        y0=y0,
    )


def band_mix_spending_function(
    alpha: float, G: PivotDistribution, band_weight: float = DEFAULT_BAND_WEIGHT
) -> SpendingFunction:
    """weight * band_lo + (1 - weight) * band_hi above y0, alpha below it"""
    if not 0.0 <= band_weight <= 1.0:
        raise DomainError(f"band weight must be in [0, 1], got {band_weight}")

    y0 = y_boundary(alpha, G)
    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.custom,
        label=f"band-mix({band_weight:g})",
        rule=lambda t: _band_mix_rule(t, alpha, G, y0, weight=band_weight),
        y0=y0,
    )


def constant_spending_function(
    alpha: float, G: PivotDistribution, alpha_x: float, label: str
) -> SpendingFunction:
    if not 0.0 <= alpha_x <= alpha:
        raise DomainError(f"alpha_x must be in [0, {alpha}], got {alpha_x}")

    return SpendingFunction(
        alpha=alpha,
        name=SpendingName.custom,
        label=label,
        rule=lambda t: np.full(np.shape(t), alpha_x, dtype=float),
        y0=y_boundary(alpha, G),
    )


def lower_tailed_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    return constant_spending_function(alpha, G, alpha, "lower-tailed")


def upper_tailed_spending_function(alpha: float, G: PivotDistribution) -> SpendingFunction:
    return constant_spending_function(alpha, G, 0.0, "upper-tailed")


def posterior_equal_tails_spending_function(
    alpha: float, G: PivotDistribution
) -> SpendingFunction:
    return constant_spending_function(alpha, G, alpha / 2, "posterior-equal-tails")


_SPENDING_BUILDERS: Dict[str, Callable[..., SpendingFunction]] = {
    "equal-tails": equal_tails_spending_function,
    "hpd-symmetric": hpd_symmetric_spending_function,
    "band-lower": band_lower_spending_function,
    "band-upper": band_upper_spending_function,
    "band-mix": band_mix_spending_function,
    "lower-tailed": lower_tailed_spending_function,
    "upper-tailed": upper_tailed_spending_function,
    "posterior-equal-tails": posterior_equal_tails_spending_function,
}

SPENDING_NAMES = tuple(_SPENDING_BUILDERS)


def get_spending_function(
    name: str,
    alpha: float,
    G: PivotDistribution,
    band_weight: Optional[float] = None,
) -> SpendingFunction:
    builder = _SPENDING_BUILDERS.get(name)

    if builder is None:
        raise UnknownSpendingError(f"Unknown spending function {name}")

    check_alpha(alpha)

    if name == "band-mix":
        weight = DEFAULT_BAND_WEIGHT if band_weight is None else band_weight
        return builder(alpha, G, band_weight=weight)

    return builder(alpha, G)


def validation_grid(y0: float, points: int = DEFAULT_VALIDATION_POINTS) -> np.ndarray:
    if points < 2:
        raise DomainError(f"validation grid needs at least 2 points, got {points}")

    return np.union1d(np.linspace(y0 - 5.0, y0 + 10.0, points), [y0])


def validate_spending(
    spending: SpendingFunction,
    G: PivotDistribution,
    grid: Optional[Iterable[float]] = None,
) -> ValidationReport:
    alpha = spending.alpha
    y0 = y_boundary(alpha, G)

    t_values = validation_grid(y0) if grid is None else np.asarray(list(grid), dtype=float)
    alpha_x = spending(t_values)
    band_lo, band_hi = band_edges(t_values, alpha, G)

    points = []
    for t, value, lo, hi in zip(t_values, alpha_x, band_lo, band_hi):
        passed = -SPENDING_TOLERANCE <= value <= alpha + SPENDING_TOLERANCE

        if t <= y0:
            passed = passed and abs(value - alpha) <= SPENDING_TOLERANCE
        if t >= y0:
            passed = passed and lo - SPENDING_TOLERANCE <= value <= hi + SPENDING_TOLERANCE
        else:
            lo = hi = alpha

        points.append(
            ValidationPoint(
                t=float(t),
                alpha_x=float(value),
                band_lo=float(lo),
                band_hi=float(hi),
                passed=bool(passed),
            )
        )

    failures = [point for point in points if not point.passed]

    if failures:
        logger.warning(
            f"{spending.label} fails at {len(failures)} of {len(points)} t-values for {G.name}"
        )

    return ValidationReport(
        spending=spending.label,
        pivot=G.name,
        alpha=alpha,
        y0=y0,
        points=points,
        passed=not failures,
        first_failure=failures[0].t if failures else None,
    )
