from typing import Callable, Optional, Tuple

import numpy as np

from bounded_credible.schemas.pivots import PivotDistribution

from .solve import quantile_solve

NUMERIC_DERIVATIVE_STEP = 1e-6


class ScipyPivot(PivotDistribution):
    """Pivot backed by a frozen scipy.stats continuous distribution"""

    def __init__(
        self,
        name: str,
        frozen,
        symmetric: bool,
        unimodal: bool = True,
    ):
        self.name = name
        self.symmetric = symmetric
        self.unimodal = unimodal
        self._dist = frozen

    @property
    def support(self) -> Tuple[float, float]:
        lower, upper = self._dist.support()
        return float(lower), float(upper)

    def cdf(self, w):
        return self._dist.cdf(w)

    def survival(self, w):
        return self._dist.sf(w)

    def density(self, w):
        return self._dist.pdf(w)

    def quantile(self, p):
        return self._dist.ppf(p)

    def inverse_survival(self, q):
        return self._dist.isf(q)

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        return self._dist.rvs(size=size, random_state=rng)


class LogTransformedPivot(PivotDistribution):
    """
    Pivot W = sign * log(V) for a positive random variable V.

    sign = -1 gives the scale-family pivot -T = tau(theta) - log(X / a) = -log(V)
    with X = theta * V, so G(w) = P(V >= exp(-w)).
    sign = +1 gives W = log(V), used for ratios of scale parameters.
    """

    def __init__(
        self,
        name: str,
        frozen,
        sign: int,
        symmetric: bool = False,
    ):
        if sign not in (-1, 1):
            raise ValueError(f"sign must be -1 or 1, got {sign}")

        self.name = name
        self.symmetric = symmetric
        self.unimodal = True
        self._dist = frozen
        self._sign = sign

    @property
    def support(self) -> Tuple[float, float]:
        return -np.inf, np.inf

    def _base_point(self, w):
        with np.errstate(over="ignore"):
            return np.exp(self._sign * np.asarray(w, dtype=float))

    def cdf(self, w):
        if self._sign < 0:
            return self._dist.sf(self._base_point(w))
        return self._dist.cdf(self._base_point(w))

    def survival(self, w):
        if self._sign < 0:
            return self._dist.cdf(self._base_point(w))
        return self._dist.sf(self._base_point(w))

    def density(self, w):
        v = self._base_point(w)
        with np.errstate(invalid="ignore"):
            value = self._dist.pdf(v) * v
        return np.nan_to_num(value, nan=0.0)

    def quantile(self, p):
        with np.errstate(divide="ignore"):
            if self._sign < 0:
                return -np.log(self._dist.isf(p))
            return np.log(self._dist.ppf(p))

    def inverse_survival(self, q):
        with np.errstate(divide="ignore"):
            if self._sign < 0:
                return -np.log(self._dist.ppf(q))
            return np.log(self._dist.isf(q))

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        return self._sign * np.log(self._dist.rvs(size=size, random_state=rng))


class AnalyticPivot(PivotDistribution):
    """Pivot given by a plain cdf callable; quantiles come from quantile_solve"""

    def __init__(
        self,
        name: str,
        cdf: Callable[[float], float],
        support: Tuple[float, float] = (-np.inf, np.inf),
        density: Optional[Callable[[float], float]] = None,
        symmetric: bool = False,
        unimodal: bool = True,
    ):
        self.name = name
        self.symmetric = symmetric
        self.unimodal = unimodal
        self._cdf = cdf
        self._density = density
        self._support = (float(support[0]), float(support[1]))

    @property
    def support(self) -> Tuple[float, float]:
        return self._support

    def cdf(self, w):
        return np.vectorize(self._cdf, otypes=[float])(w)

    def density(self, w):
        if self._density is not None:
            return np.vectorize(self._density, otypes=[float])(w)

        w = np.asarray(w, dtype=float)
        step = NUMERIC_DERIVATIVE_STEP * np.maximum(1.0, np.abs(w))
        return (self.cdf(w + step) - self.cdf(w - step)) / (2 * step)

    def quantile(self, p):
        return np.vectorize(self._quantile_at, otypes=[float])(p)

    def _quantile_at(self, p: float) -> float:
        # the support edges are the limits at 0 and 1
        if p <= 0.0:
            return self._support[0]
        if p >= 1.0:
            return self._support[1]
        return quantile_solve(self, p)
