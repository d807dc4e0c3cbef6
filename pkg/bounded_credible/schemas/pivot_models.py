from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from bounded_credible.errors import DomainError

from .pivots import PivotDistribution


class PivotModel(ABC):
    """
    Bundle (a1, a2, tau, sampler, G) with -T(X, theta) = (tau(theta) - a1(X)) / a2(X) ~ G.

    Observations are numpy arrays whose first axis indexes replicates.
    """

    name: str
    pivot: PivotDistribution
    # a2(x) identical for every observation, as quadrature needs
    constant_a2: bool = True
    # observation columns that must be strictly positive
    positive_columns: Tuple[int, ...] = ()

    @property
    @abstractmethod
    def observation_size(self) -> int:
        raise NotImplementedError()

    @abstractmethod
    def a1(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError()

    @abstractmethod
    def a2(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError()

    @abstractmethod
    def tau(self, theta: Tuple[float, ...]) -> float:
        raise NotImplementedError()

    @abstractmethod
    def theta_from_tau(self, value: float) -> Tuple[float, ...]:
        raise NotImplementedError()

    @abstractmethod
    def sample(
        self, theta: Tuple[float, ...], rng: np.random.Generator, size: int
    ) -> np.ndarray:
        raise NotImplementedError()

    def check_observation(self, x: np.ndarray) -> np.ndarray:
        """x as a (replicates, observation_size) float array inside the sample space"""
        values = np.asarray(x, dtype=float)
        if values.ndim == 1:
            values = values.reshape(1, -1)

        if values.ndim != 2 or values.shape[1] != self.observation_size:
            raise DomainError(
                f"{self.name} observations have {self.observation_size} values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise DomainError(f"{self.name} observations must be finite")

        for column in self.positive_columns:
            if not np.all(values[:, column] > 0.0):
                raise DomainError(
                    f"{self.name} needs a positive value in column {column}, got {values[:, column].min()}"
                )

        return values

    def negated_pivot(self, x: np.ndarray, theta: Tuple[float, ...]) -> np.ndarray:
        return (self.tau(theta) - self.a1(x)) / self.a2(x)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, pivot={self.pivot.name})"
