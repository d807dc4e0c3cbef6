from typing import Callable, Dict

from scipy import stats

from bounded_credible.errors import UnknownModelError
from bounded_credible.schemas.pivots import PivotDistribution

from .analytic import AnalyticPivot, LogTransformedPivot, ScipyPivot
from .empirical import (
    CALIBRATION_DRAWS,
    EmpiricalPivot,
    calibrate,
    calibration_rng,
    make_empirical_pivot,
)
from .solve import QUANTILE_TOLERANCE, quantile_solve


def normal_pivot(scale: float = 1.0) -> ScipyPivot:
    return ScipyPivot("normal", stats.norm(scale=scale), symmetric=True)


def student_t_pivot(df: float) -> ScipyPivot:
    return ScipyPivot(f"student-t({df:g})", stats.t(df), symmetric=True)


def logistic_pivot() -> ScipyPivot:
    return ScipyPivot("logistic", stats.logistic(), symmetric=True)


def laplace_pivot() -> ScipyPivot:
    return ScipyPivot("laplace", stats.laplace(), symmetric=True)


def exponential_pivot() -> ScipyPivot:
    return ScipyPivot("exponential", stats.expon(), symmetric=False)


def shifted_exponential_pivot() -> ScipyPivot:
    # Exp(1) moved to mean zero
    return ScipyPivot("shifted-exponential", stats.expon(loc=-1.0), symmetric=False)


def log_gamma_pivot(shape: float) -> LogTransformedPivot:
    return LogTransformedPivot(f"log-gamma({shape:g})", stats.gamma(shape), sign=-1)


def log_weibull_pivot(shape: float) -> LogTransformedPivot:
    return LogTransformedPivot(
        f"log-weibull({shape:g})", stats.weibull_min(shape), sign=-1
    )


def log_exponential_pivot() -> LogTransformedPivot:
    return LogTransformedPivot("log-exponential", stats.expon(), sign=-1)


def log_ratio_gamma_pivot(shape1: float, shape2: float) -> LogTransformedPivot:
    # V1 / V2 with independent Gamma(shape1), Gamma(shape2) is beta-prime
    return LogTransformedPivot(
        f"log-ratio-gamma({shape1:g},{shape2:g})",
        stats.betaprime(shape1, shape2),
        sign=1,
        symmetric=shape1 == shape2,
    )


_PIVOT_BUILDERS: Dict[str, Callable[..., PivotDistribution]] = {
    "normal": normal_pivot,
    "student-t": student_t_pivot,
    "logistic": logistic_pivot,
    "laplace": laplace_pivot,
    "exponential": exponential_pivot,
    "shifted-exponential": shifted_exponential_pivot,
    "log-gamma": log_gamma_pivot,
    "log-weibull": log_weibull_pivot,
    "log-exponential": log_exponential_pivot,
    "log-ratio-gamma": log_ratio_gamma_pivot,
}

PIVOT_NAMES = tuple(_PIVOT_BUILDERS)

LOCATION_PIVOT_NAMES = ("normal", "laplace", "logistic", "shifted-exponential")


def get_pivot(name: str, **params) -> PivotDistribution:
    builder = _PIVOT_BUILDERS.get(name)

    if builder is None:
        raise UnknownModelError(f"Unknown pivot distribution {name}")

    return builder(**params)


__all__ = [
    "AnalyticPivot",
    "CALIBRATION_DRAWS",
    "EmpiricalPivot",
    "LOCATION_PIVOT_NAMES",
    "LogTransformedPivot",
    "PIVOT_NAMES",
    "QUANTILE_TOLERANCE",
    "ScipyPivot",
    "calibrate",
    "calibration_rng",
    "get_pivot",
    "make_empirical_pivot",
    "quantile_solve",
]
