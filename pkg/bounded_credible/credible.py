"""
Credible intervals for tau(theta) >= 0 under the truncated right Haar prior.

With t = a1 / a2 and S = 1 - G(-t), the posterior survival function of
tau(theta) is (1 - G((y - a1) / a2)) / S for y >= 0. Every bound below is
written through G.survival / G.inverse_survival so both tails keep their
precision.
"""
import logging
from typing import Tuple

import numpy as np

from bounded_credible.errors import (
    DegeneratePosteriorError,
    DomainError,
    FeasibilityError,
    UnsupportedModelError,
)
from bounded_credible.schemas.intervals import CredibleInterval
from bounded_credible.schemas.pivots import PivotDistribution

POSTERIOR_DEGENERACY_THRESHOLD = 1e-300
PIVOT_MASS_TOLERANCE = 1e-10
FEASIBILITY_SLACK = 1e-12

logger = logging.getLogger(__name__)


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")


def _check_scale(a2: float) -> None:
    if not a2 > 0.0:
        raise DomainError(f"a2 must be positive, got {a2}")


def posterior_normalizer(t: float, G: PivotDistribution) -> float:
    """1 - G(-t), raising when it is too small to divide by"""
    normalizer = float(G.survival(-t))

    if not normalizer >= POSTERIOR_DEGENERACY_THRESHOLD:
        raise DegeneratePosteriorError(
            f"1 - G(-t) = {normalizer} at t={t} for {G.name}"
        )

    return normalizer


def posterior_survival(y: float, a1: float, a2: float, G: PivotDistribution) -> float:
    _check_scale(a2)
    if y < 0.0:
        raise DomainError(f"y must be nonnegative, got {y}")

    normalizer = posterior_normalizer(a1 / a2, G)

    if y == 0.0:
        return 1.0

    return min(1.0, float(G.survival((y - a1) / a2)) / normalizer)


def posterior_mass(
    lower: float, upper: float, a1: float, a2: float, G: PivotDistribution
) -> float:
    _check_scale(a2)
    if not 0.0 <= lower <= upper:
        raise DomainError(f"[{lower}, {upper}] is not an interval in [0, inf)")

    normalizer = posterior_normalizer(a1 / a2, G)
    above_lower = float(G.survival((lower - a1) / a2))
    above_upper = float(G.survival((upper - a1) / a2))

    return (above_lower - above_upper) / normalizer


def y_boundary(alpha: float, G: PivotDistribution) -> float:
    check_alpha(alpha)
    return -float(G.quantile(alpha / (1 + alpha)))


def delta0(t: float, alpha: float, G: PivotDistribution) -> float:
    check_alpha(alpha)
    return (1 - alpha) * float(G.survival(-t))


def credible_bounds(
    a1,
    a2,
    alpha: float,
    alpha_x,
    G: PivotDistribution,
    strict: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Elementwise bounds for arrays of (a1, a2, alpha_x).

    lower = a1 + a2 * G^-1(1 - S * (1 - alpha + alpha_x)), exactly 0 when alpha_x >= alpha
    upper = a1 + a2 * G^-1(1 - S * alpha_x)

    Replicates whose normalizer S falls below the degeneracy threshold get the
    limiting interval [0, 0]; with strict=True they raise instead.
    """
    a1, a2, alpha_x = np.broadcast_arrays(
        np.asarray(a1, dtype=float),
        np.asarray(a2, dtype=float),
        np.asarray(alpha_x, dtype=float),
    )

    t = a1 / a2
    normalizer = G.survival(-t)
    degenerate = ~(normalizer >= POSTERIOR_DEGENERACY_THRESHOLD)

    if np.any(degenerate):
        if strict:
            raise DegeneratePosteriorError(
                f"1 - G(-t) below {POSTERIOR_DEGENERACY_THRESHOLD} for {G.name}"
            )
        logger.warning(
            f"{int(np.count_nonzero(degenerate))} degenerate posteriors for {G.name}, using [0, 0]"
        )
        normalizer = np.where(degenerate, 1.0, normalizer)

    spends_everything_above = alpha_x >= alpha

    lower_tail = np.clip(normalizer * (1 - alpha + alpha_x), 0.0, 1.0)
    upper_tail = np.clip(normalizer * alpha_x, 0.0, 1.0)

    lower = a1 + a2 * G.inverse_survival(lower_tail)
    upper = a1 + a2 * G.inverse_survival(upper_tail)

    lower = np.where(spends_everything_above, 0.0, np.maximum(lower, 0.0))
    upper = np.maximum(upper, lower)

    lower = np.where(degenerate, 0.0, lower)
    upper = np.where(degenerate, 0.0, upper)

    return lower, upper


def bounds_from_spending(
    a1: float,
    a2: float,
    alpha: float,
    alpha_x: float,
    G: PivotDistribution,
) -> CredibleInterval:
    check_alpha(alpha)
    _check_scale(a2)

    if not 0.0 <= alpha_x <= alpha:
        raise DomainError(f"alpha_x must be in [0, {alpha}], got {alpha_x}")

    lower, upper = credible_bounds(a1, a2, alpha, alpha_x, G, strict=True)

    return CredibleInterval(
        lower=float(lower),
        upper=float(upper),
        credibility=1 - alpha,
        spent_upper=alpha_x,
    )


def equal_tails_gammas(t: float, alpha: float, G: PivotDistribution) -> Tuple[float, float]:
    """(gamma1, gamma2) splitting the complement of delta0 evenly over both G-tails"""
    check_alpha(alpha)

    normalizer = posterior_normalizer(t, G)
    below = float(G.cdf(-t))
    tail = (below + alpha * normalizer) / 2

    gamma1 = -float(G.quantile(tail))
    gamma2 = float(G.inverse_survival(tail))

    return gamma1, gamma2


def pivot_quantile_bounds(
    a1: float,
    a2: float,
    gamma1: float,
    gamma2: float,
    alpha: float,
    G: PivotDistribution,
) -> CredibleInterval:
    check_alpha(alpha)
    _check_scale(a2)

    t = a1 / a2
    required = delta0(t, alpha, G)
    captured = float(G.survival(-gamma1)) - float(G.survival(gamma2))

    if abs(captured - required) > PIVOT_MASS_TOLERANCE:
        raise DomainError(
            f"G(gamma2) - G(-gamma1) = {captured} but delta0 = {required}"
        )

    lower = a1 - a2 * gamma1

    if lower < -FEASIBILITY_SLACK * a2 * max(1.0, abs(t)):
        raise FeasibilityError(
            f"-gamma1 = {-gamma1} violates -gamma1 >= -t(x) = {-t} (lower bound {lower})"
        )

    lower = max(lower, 0.0)
    upper = a1 + a2 * gamma2
    normalizer = posterior_normalizer(t, G)

    return CredibleInterval(
        lower=lower,
        upper=upper,
        credibility=1 - alpha,
        spent_upper=float(G.survival(gamma2)) / normalizer,
    )


def hpd_symmetric_bounds(
    a1: float, a2: float, alpha: float, G: PivotDistribution
) -> CredibleInterval:
    """
    HPD interval for symmetric unimodal G.

    The upper bound is the larger of G^-1(1 - alpha G(t)) and
    G^-1((1 + (1 - alpha) G(t)) / 2): the first applies for t <= y0, where the
    lower bound is 0 and all of alpha sits above, the second beyond it.
    """
    if not (G.symmetric and G.unimodal):
        raise UnsupportedModelError(
            f"HPD bounds need a symmetric unimodal pivot, {G.name} is not"
        )
    check_alpha(alpha)
    _check_scale(a2)

    t = a1 / a2
    normalizer = posterior_normalizer(t, G)
    at_t = float(G.cdf(t))

    lower = a1 + a2 * float(G.quantile((1 - (1 - alpha) * at_t) / 2))
    upper_all_above = float(G.inverse_survival(alpha * at_t))
    upper_split = float(G.inverse_survival((1 - (1 - alpha) * at_t) / 2))
    upper = a1 + a2 * max(upper_all_above, upper_split)

    alpha_x = min(alpha, float(G.survival((upper - a1) / a2)) / normalizer)

    return CredibleInterval(
        lower=max(0.0, lower),
        upper=upper,
        credibility=1 - alpha,
        spent_upper=alpha_x,
    )


def baseline_bounds(
    a1,
    a2,
    alpha: float,
    G: PivotDistribution,
    truncated: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Unrestricted interval [a1 + a2 G^-1(alpha/(1+alpha)), a1 + a2 G^-1(1/(1+alpha))],
    or with truncated=True its intersection with [0, inf).
    """
    check_alpha(alpha)

    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    edge = alpha / (1 + alpha)

    lower = a1 + a2 * G.quantile(edge)
    upper = a1 + a2 * G.inverse_survival(edge)

    if truncated:
        lower = np.maximum(lower, 0.0)
        upper = np.maximum(upper, 0.0)

    return lower, upper

