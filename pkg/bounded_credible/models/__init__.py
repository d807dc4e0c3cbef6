import inspect
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

from scipy import stats

from bounded_credible.errors import DomainError, UnknownModelError
from bounded_credible.random_streams import point_rng
from bounded_credible.schemas.pivot_models import PivotModel

from .combination import homogeneous_scale_model, linear_combination_model
from .location import location_model
from .location_scale import location_scale_model, quantile_model
from .scale import scale_model, scale_ratio_model

KS_REPLICATES = 100_000

logger = logging.getLogger(__name__)


def _location(f0_name: str) -> Callable[..., PivotModel]:
    def build(a: float = 0.0) -> PivotModel:
        return location_model(f0_name, offset=a)

    return build


def _scale(f1_name: str) -> Callable[..., PivotModel]:
    def build(shape: float = 1.0, a: float = 1.0) -> PivotModel:
        return scale_model(f1_name, shape=shape, a=a)

    return build


def _scale_exponential(a: float = 1.0) -> PivotModel:
    return scale_model("exponential", a=a)


def _location_scale_normal(n: int = 10) -> PivotModel:
    return location_scale_model("normal", n=n)


def _linear_combination(
    weights: Sequence[float] = (1.0, -1.0), component: str = "normal"
) -> PivotModel:
    return linear_combination_model(weights, component=component)


def _scale_ratio(shapes: Sequence[float] = (1.0, 1.0)) -> PivotModel:
    return scale_ratio_model(tuple(shapes))


def _quantile_normal(eta: float = 0.0, n: int = 10) -> PivotModel:
    return quantile_model(eta=eta, n=n)


def _homogeneous_scale_normal(
    weights: Sequence[float] = (1.0, -1.0), n: int = 10
) -> PivotModel:
    return homogeneous_scale_model(weights, n=n)


_MODEL_BUILDERS: Dict[str, Callable[..., PivotModel]] = {
    "location-normal": _location("normal"),
    "location-laplace": _location("laplace"),
    "location-logistic": _location("logistic"),
    "location-shifted-exponential": _location("shifted-exponential"),
    "scale-gamma": _scale("gamma"),
    "scale-weibull": _scale("weibull"),
    "scale-exponential": _scale_exponential,
    "location-scale-normal": _location_scale_normal,
    "linear-combination": _linear_combination,
    "scale-ratio": _scale_ratio,
    "quantile-normal": _quantile_normal,
    "homogeneous-scale-normal": _homogeneous_scale_normal,
}

MODEL_NAMES = tuple(_MODEL_BUILDERS)


def model_parameters(name: str) -> List[str]:
    builder = _MODEL_BUILDERS.get(name)

    if builder is None:
        raise UnknownModelError(f"Unknown model {name}")

    return list(inspect.signature(builder).parameters)


def get_model(name: str, params: Optional[Dict[str, Any]] = None) -> PivotModel:
    accepted = model_parameters(name)
    given = {key: value for key, value in (params or {}).items() if value is not None}

    unexpected = sorted(set(given) - set(accepted))
    if unexpected:
        raise DomainError(
            f"Model {name} takes {accepted or 'no parameters'}, got {unexpected}"
        )

    return _MODEL_BUILDERS[name](**given)


def pivotal_ks_statistics(
    model: PivotModel,
    tau_values: Sequence[float],
    replicates: int = KS_REPLICATES,
    seed: int = 0,
) -> List[float]:
    """KS distance between simulated -T(X, theta) and G at each tau"""
    statistics = []

    for index, tau in enumerate(tau_values):
        theta = model.theta_from_tau(tau)
        x = model.sample(theta, point_rng(seed, index), replicates)
        draws = model.negated_pivot(x, theta)

        statistic = float(stats.kstest(draws, model.pivot.cdf).statistic)
        logger.info(f"{model.name} at tau={tau}: KS statistic {statistic:.5f}")
        statistics.append(statistic)

    return statistics


__all__ = [
    "MODEL_NAMES",
    "get_model",
    "homogeneous_scale_model",
    "linear_combination_model",
    "location_model",
    "location_scale_model",
    "model_parameters",
    "pivotal_ks_statistics",
    "quantile_model",
    "scale_model",
    "scale_ratio_model",
]
