from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np


class PivotDistribution(ABC):
    """
    Distribution G of the negated pivot -T(X, theta) = (tau(theta) - a1(X)) / a2(X).

    Values are immutable after construction. All methods accept scalars or
    numpy arrays and broadcast like numpy ufuncs.
    """

    name: str = "pivot"
    symmetric: bool = False
    unimodal: bool = True

    @property
    @abstractmethod
    def support(self) -> Tuple[float, float]:
        raise NotImplementedError()

    @abstractmethod
    def cdf(self, w):
        raise NotImplementedError()

    @abstractmethod
    def density(self, w):
        raise NotImplementedError()

    @abstractmethod
    def quantile(self, p):
        raise NotImplementedError()

    def survival(self, w):
        return 1.0 - self.cdf(w)

    def inverse_survival(self, q):
        return self.quantile(1.0 - np.asarray(q, dtype=float))

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        return self.quantile(rng.uniform(size=size))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"
