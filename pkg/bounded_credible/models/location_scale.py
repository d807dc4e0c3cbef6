from typing import Tuple

import numpy as np
from scipy import stats

from bounded_credible.errors import DomainError, UnknownModelError
from bounded_credible.pivots import calibrate, student_t_pivot
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.pivots import PivotDistribution

LOCATION_SCALE_FAMILIES = ("normal", "laplace", "logistic")

_STANDARD_FAMILIES = {
    "normal": stats.norm(),
    "laplace": stats.laplace(),
    "logistic": stats.logistic(),
}

# theta used to draw calibration samples, any value gives the same pivot
_CALIBRATION_THETA = (0.0, 1.0)


def _check_sample_size(n: int) -> None:
    if n < 2:
        raise DomainError(f"need n >= 2 observations, got {n}")


def _normal_summaries(
    mean: float, sigma: float, n: int, rng: np.random.Generator, size: int
) -> np.ndarray:
    # (sample mean, sample standard deviation) of n normal draws, drawn directly
    sample_mean = mean + sigma * rng.standard_normal(size) / np.sqrt(n)
    sample_sd = sigma * np.sqrt(rng.chisquare(n - 1, size=size) / (n - 1))
    return np.column_stack([sample_mean, sample_sd])


class LocationScaleModel(PivotModel):
    """
    n draws from f0((x - mu) / sigma) / sigma summarized by (mean, sd),
    constrained to mu >= 0. a1 = mean, a2 = sd / sqrt(n).
    """

    constant_a2 = False
    positive_columns = (1,)

    def __init__(self, family: str, n: int):
        self.name = f"location-scale-{family}"
        self.family = family
        self.n = n
        self._base = _STANDARD_FAMILIES[family]
        self.pivot = self._build_pivot()

    def _build_pivot(self) -> PivotDistribution:
        if self.family == "normal":
            return student_t_pivot(self.n - 1)

        return calibrate(
            f"{self.name}({self.n})",
            lambda rng, size: self.negated_pivot(
                self.sample(_CALIBRATION_THETA, rng, size), _CALIBRATION_THETA
            ),
        )

    @property
    def observation_size(self) -> int:
        return 2

    def a1(self, x: np.ndarray) -> np.ndarray:
        return x[:, 0]

    def a2(self, x: np.ndarray) -> np.ndarray:
        return x[:, 1] / np.sqrt(self.n)

    def tau(self, theta: Tuple[float, ...]) -> float:
        return theta[0]

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return (value, 1.0)

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        mean, sigma = theta

        if self.family == "normal":
            return _normal_summaries(mean, sigma, self.n, rng, size)

        draws = mean + sigma * self._base.rvs(size=(size, self.n), random_state=rng)
        return np.column_stack([draws.mean(axis=1), draws.std(axis=1, ddof=1)])


def location_scale_model(family: str = "normal", n: int = 10) -> LocationScaleModel:
    if family not in LOCATION_SCALE_FAMILIES:
        raise UnknownModelError(
            f"Unknown location-scale family {family}, expected one of {LOCATION_SCALE_FAMILIES}"
        )
    _check_sample_size(n)

    return LocationScaleModel(family, n)


class QuantileModel(PivotModel):
    """
    Normal location-scale sample with target tau = mu + eta * sigma >= 0.

    a1 = mean, a2 = sd / sqrt(n); -T is noncentral Student with n - 1 degrees
    of freedom and noncentrality eta * sqrt(n), represented empirically.
    """

    constant_a2 = False
    positive_columns = (1,)

    def __init__(self, eta: float, n: int):
        self.name = "quantile-normal"
        self.eta = eta
        self.n = n
        self.pivot = calibrate(
            f"quantile-normal({eta:g},{n})",
            lambda rng, size: self.negated_pivot(
                self.sample(_CALIBRATION_THETA, rng, size), _CALIBRATION_THETA
            ),
        )

    @property
    def observation_size(self) -> int:
        return 2

    def a1(self, x: np.ndarray) -> np.ndarray:
        return x[:, 0]

    def a2(self, x: np.ndarray) -> np.ndarray:
        return x[:, 1] / np.sqrt(self.n)

    def tau(self, theta: Tuple[float, ...]) -> float:
        return theta[0] + self.eta * theta[1]

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return (value - self.eta, 1.0)

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        mean, sigma = theta
        return _normal_summaries(mean, sigma, self.n, rng, size)


def quantile_model(eta: float = 0.0, n: int = 10) -> QuantileModel:
    _check_sample_size(n)
    return QuantileModel(eta, n)
