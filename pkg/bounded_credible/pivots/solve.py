import math
from typing import Tuple

import numpy as np
from scipy.optimize import brentq

from bounded_credible.errors import DistributionMisconfigurationError, DomainError
from bounded_credible.schemas.pivots import PivotDistribution

QUANTILE_TOLERANCE = 1e-12
MAX_BRACKET_EXPANSIONS = 1000
MAX_SOLVER_ITERATIONS = 500


def quantile_solve(
    dist: PivotDistribution,
    p: float,
    tolerance: float = QUANTILE_TOLERANCE,
) -> float:
    """
    Inverts dist.cdf at p by bracket expansion from the support followed by
    Brent's bracketing method. The returned root lies in a bracket of width
    at most tolerance * max(1, |w|).
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"Probability {p} is outside (0, 1)")

    low, high = _find_bracket(dist, p)

    low_value = _cdf_at(dist, low) - p
    high_value = _cdf_at(dist, high) - p

    if low_value == 0.0:
        root = low
    elif high_value == 0.0:
        root = high
    else:
        root = brentq(
            lambda w: _cdf_at(dist, w) - p,
            low,
            high,
            xtol=tolerance / 2,
            rtol=max(tolerance / 2, 4 * np.finfo(float).eps),
            maxiter=MAX_SOLVER_ITERATIONS,
        )

    if float(dist.density(root)) <= 0.0:
        raise DistributionMisconfigurationError(
            f"{dist.name} has a flat cdf at p={p} (w={root}), quantile is not unique"
        )

    return float(root)


def _cdf_at(dist: PivotDistribution, w: float) -> float:
    value = float(dist.cdf(w))
    if not math.isfinite(value):
        raise DistributionMisconfigurationError(
            f"{dist.name} cdf returned {value} at w={w}"
        )
    return value


def _find_bracket(dist: PivotDistribution, p: float) -> Tuple[float, float]:
    lower_edge, upper_edge = dist.support
    low_finite = math.isfinite(lower_edge)
    high_finite = math.isfinite(upper_edge)

    if low_finite and high_finite:
        if _cdf_at(dist, lower_edge) <= p <= _cdf_at(dist, upper_edge):
            return lower_edge, upper_edge
        raise DistributionMisconfigurationError(
            f"No bracket for p={p} within support of {dist.name}"
        )

    width = 1.0
    for _ in range(MAX_BRACKET_EXPANSIONS):
        if low_finite:
            low, high = lower_edge, lower_edge + width
        elif high_finite:
            low, high = upper_edge - width, upper_edge
        else:
            low, high = -width, width

        if not (math.isfinite(low) and math.isfinite(high)):
            break

        if _cdf_at(dist, low) <= p <= _cdf_at(dist, high):
            return low, high

        width *= 2.0

    raise DistributionMisconfigurationError(
        f"No bracket for p={p} within support of {dist.name}"
    )
