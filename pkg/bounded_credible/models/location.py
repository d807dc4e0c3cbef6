from typing import Tuple

import numpy as np

from bounded_credible.errors import UnknownModelError
from bounded_credible.pivots import LOCATION_PIVOT_NAMES, get_pivot
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.pivots import PivotDistribution


class LocationModel(PivotModel):
    """
    X = theta - W with W ~ G, constrained to theta >= offset.

    Shifting by the offset gives a1(x) = x - offset, a2 = 1 and
    tau(theta) = theta - offset.
    """

    def __init__(self, name: str, pivot: PivotDistribution, offset: float = 0.0):
        self.name = name
        self.pivot = pivot
        self.offset = offset

    @property
    def observation_size(self) -> int:
        return 1

    def a1(self, x: np.ndarray) -> np.ndarray:
        return x[:, 0] - self.offset

    def a2(self, x: np.ndarray) -> np.ndarray:
        return np.ones(len(x))

    def tau(self, theta: Tuple[float, ...]) -> float:
        return theta[0] - self.offset

    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        return (value + self.offset,)

    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        return (theta[0] - self.pivot.sample(size, rng)).reshape(size, 1)


def location_model(f0_name: str, offset: float = 0.0) -> LocationModel:
    if f0_name not in LOCATION_PIVOT_NAMES:
        raise UnknownModelError(
            f"Unknown location family {f0_name}, expected one of {LOCATION_PIVOT_NAMES}"
        )

    return LocationModel(f"location-{f0_name}", get_pivot(f0_name), offset=offset)
