from typing import Tuple

import numpy as np
from scipy import stats

from bounded_credible.errors import DomainError, UnknownModelError
from bounded_credible.pivots import (
    log_exponential_pivot,
    log_gamma_pivot,
    log_ratio_gamma_pivot,
    log_weibull_pivot,
)
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.pivots import PivotDistribution

SCALE_FAMILIES = ("gamma", "weibull", "exponential")


class ScaleModel(PivotModel):
    """
    X = theta * V with V ~ f1 (unit scale), constrained to theta >= a.

    a1(x) = log x - log a, a2 = 1, tau(theta) = log theta - log a, so that
    -T = -log V. A Pareto observation with known power gamma0 enters as
    gamma0 * log X under the exponential family.
    """

    positive_columns = (0,)

    def __init__(self, name: str, base, pivot: PivotDistribution, lower_bound: float):
        self.name = name
        self.pivot = pivot
        self.lower_bound = lower_bound
        self._base = base
        self._log_lower_bound = float(np.log(lower_bound))

    @property
    def observation_size(self) -> int:
        return 1

    def a1(self, x: np.ndarray) -> np.ndarray:
        return np.log(x[:, 0]) - self._log_lower_bound

    def a2(self, x: np.ndarray) -> np.ndarray:
        return np.ones(len(x))

    def tau(self, theta: Tuple[float, ...]) -> float:
        return float(np.log(theta[0])) - self._log_lower_bound

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return (self.lower_bound * float(np.exp(value)),)

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        draws = self._base.rvs(size=size, random_state=rng)
        return (theta[0] * draws).reshape(size, 1)


def scale_model(f1_name: str, shape: float = 1.0, a: float = 1.0) -> ScaleModel:
    if not shape > 0.0:
        raise DomainError(f"shape must be positive, got {shape}")
    if not a > 0.0:
        raise DomainError(f"scale lower bound a must be positive, got {a}")

    if f1_name == "gamma":
        return ScaleModel("scale-gamma", stats.gamma(shape), log_gamma_pivot(shape), a)
    if f1_name == "weibull":
        return ScaleModel(
            "scale-weibull", stats.weibull_min(shape), log_weibull_pivot(shape), a
        )
    if f1_name == "exponential":
        return ScaleModel("scale-exponential", stats.expon(), log_exponential_pivot(), a)

    raise UnknownModelError(
        f"Unknown scale family {f1_name}, expected one of {SCALE_FAMILIES}"
    )


class ScaleRatioModel(PivotModel):
    """
    Independent X_i = theta_i * V_i with V_i ~ Gamma(shape_i), constrained to
    theta2 / theta1 >= 1.
    """

    positive_columns = (0, 1)

    def __init__(self, shapes: Tuple[float, float]):
        self.name = "scale-ratio"
        self.shapes = shapes
        self.pivot = log_ratio_gamma_pivot(*shapes)

    @property
    def observation_size(self) -> int:
        return 2

    def a1(self, x: np.ndarray) -> np.ndarray:
        return np.log(x[:, 1]) - np.log(x[:, 0])

    def a2(self, x: np.ndarray) -> np.ndarray:
        return np.ones(len(x))

    def tau(self, theta: Tuple[float, ...]) -> float:
        return float(np.log(theta[1]) - np.log(theta[0]))

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return (1.0, float(np.exp(value)))

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        first = theta[0] * rng.gamma(self.shapes[0], size=size)
        second = theta[1] * rng.gamma(self.shapes[1], size=size)
        return np.column_stack([first, second])


def scale_ratio_model(shapes: Tuple[float, float] = (1.0, 1.0)) -> ScaleRatioModel:
    if len(shapes) != 2:
        raise DomainError(f"scale ratio needs two shapes, got {len(shapes)}")
    if not all(shape > 0.0 for shape in shapes):
        raise DomainError(f"shapes must be positive, got {shapes}")

    return ScaleRatioModel((float(shapes[0]), float(shapes[1])))
