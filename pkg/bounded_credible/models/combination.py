from typing import Sequence, Tuple

import numpy as np

from bounded_credible.errors import DomainError, UnknownModelError
from bounded_credible.pivots import (
    LOCATION_PIVOT_NAMES,
    calibrate,
    get_pivot,
    normal_pivot,
    student_t_pivot,
)
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.pivots import PivotDistribution


def _check_weights(weights: Sequence[float]) -> np.ndarray:
    values = np.asarray(weights, dtype=float)

    if values.ndim != 1 or len(values) < 2:
        raise DomainError(f"need at least two weights, got {list(weights)}")
    if not np.any(values != 0.0):
        raise DomainError("weights must not all be zero")

    return values


def _spread(weights: np.ndarray, value: float) -> np.ndarray:
    # minimum-norm theta with weights . theta = value
    return value * weights / np.dot(weights, weights)


class LinearCombinationModel(PivotModel):
    """
    Independent X_i = theta_i - W_i with W_i ~ G_component; target
    tau = sum(a_i theta_i) >= 0 with a1 = sum(a_i x_i) and a2 = 1.
    """

    def __init__(self, weights: np.ndarray, component: str):
        self.name = "linear-combination"
        self.weights = weights
        self.component = component
        self._component_pivot = get_pivot(component)
        self.pivot = self._build_pivot()

    def _build_pivot(self) -> PivotDistribution:
        if self.component == "normal":
            return normal_pivot(scale=float(np.linalg.norm(self.weights)))

        return calibrate(
            f"linear-combination({self.component})",
            lambda rng, size: self._component_draws(rng, size) @ self.weights,
        )

    def _component_draws(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.column_stack(
            [self._component_pivot.sample(size, rng) for _ in self.weights]
        )

    @property
    def observation_size(self) -> int:
        return len(self.weights)

    def a1(self, x: np.ndarray) -> np.ndarray:
        return x @ self.weights

    def a2(self, x: np.ndarray) -> np.ndarray:
        return np.ones(len(x))

    def tau(self, theta: Tuple[float, ...]) -> float:
        return float(np.dot(self.weights, theta))

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return tuple(float(component) for component in _spread(self.weights, value))

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        return np.asarray(theta, dtype=float) - self._component_draws(rng, size)


def linear_combination_model(
    weights: Sequence[float] = (1.0, -1.0), component: str = "normal"
) -> LinearCombinationModel:
    values = _check_weights(weights)

    if component not in LOCATION_PIVOT_NAMES:
        raise UnknownModelError(
            f"Unknown component family {component}, expected one of {LOCATION_PIVOT_NAMES}"
        )

    return LinearCombinationModel(values, component)


class HomogeneousScaleModel(PivotModel):
    """
    p normal groups of n draws sharing sigma; target tau = sum(a_i mu_i) >= 0.

    Observations are (group means..., pooled sd). a1 = sum(a_i mean_i),
    a2 = pooled_sd * sqrt(sum(a_i^2) / n), and -T is Student with p(n - 1)
    degrees of freedom.
    """

    constant_a2 = False
    positive_columns = (-1,)

    def __init__(self, weights: np.ndarray, n: int):
        self.name = "homogeneous-scale-normal"
        self.weights = weights
        self.n = n
        self.degrees_of_freedom = len(weights) * (n - 1)
        self.pivot = student_t_pivot(self.degrees_of_freedom)
        self._scale_factor = float(np.sqrt(np.dot(weights, weights) / n))

    @property
    def observation_size(self) -> int:
        return len(self.weights) + 1

    def a1(self, x: np.ndarray) -> np.ndarray:
        return x[:, :-1] @ self.weights

    def a2(self, x: np.ndarray) -> np.ndarray:
        return x[:, -1] * self._scale_factor

    def tau(self, theta: Tuple[float, ...]) -> float:
        return float(np.dot(self.weights, theta[:-1]))

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        means = tuple(float(component) for component in _spread(self.weights, value))
        return means + (1.0,)

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        means = np.asarray(theta[:-1], dtype=float)
        sigma = theta[-1]
        groups = len(means)

        group_means = means + sigma * rng.standard_normal((size, groups)) / np.sqrt(
            self.n
        )
        pooled_sd = sigma * np.sqrt(
            rng.chisquare(self.degrees_of_freedom, size=size) / self.degrees_of_freedom
        )
        return np.column_stack([group_means, pooled_sd])


def homogeneous_scale_model(
    weights: Sequence[float] = (1.0, -1.0), n: int = 10
) -> HomogeneousScaleModel:
    values = _check_weights(weights)

    if n < 2:
        raise DomainError(f"need n >= 2 observations per group, got {n}")

    return HomogeneousScaleModel(values, n)
