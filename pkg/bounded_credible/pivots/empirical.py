import logging
from typing import Callable, Sequence, Tuple

import numpy as np

from bounded_credible.errors import InsufficientDataError
from bounded_credible.schemas.pivots import PivotDistribution

MIN_EMPIRICAL_SAMPLES = 1000
CALIBRATION_DRAWS = 1_000_000
CALIBRATION_SEED = 20240917

logger = logging.getLogger(__name__)


class EmpiricalPivot(PivotDistribution):
    """
    Pivot estimated from draws of -T.

    The cdf and quantile are the same piecewise-linear map between order
    statistics (plotting position i / (N - 1) for the i-th of N sorted draws),
    clamped flat outside [first, last]. Tied draws share the mean plotting
    position of their block.
    """

    def __init__(self, samples: np.ndarray, name: str = "empirical"):
        ordered = np.sort(np.asarray(samples, dtype=float))
        positions = np.linspace(0.0, 1.0, len(ordered))

        knots, block = np.unique(ordered, return_inverse=True)
        knot_positions = np.bincount(block, weights=positions) / np.bincount(block)

        self.name = name
        self.symmetric = False
        self.unimodal = True
        self._samples = ordered
        self._positions = positions
        self._knots = knots
        self._knot_positions = knot_positions

    @property
    def samples(self) -> np.ndarray:
        return self._samples

    @property
    def support(self) -> Tuple[float, float]:
        return float(self._samples[0]), float(self._samples[-1])

    def cdf(self, w):
        return np.interp(w, self._knots, self._knot_positions, left=0.0, right=1.0)

    def density(self, w):
        w = np.asarray(w, dtype=float)
        if len(self._knots) < 2:
            return np.zeros_like(w)

        segment = np.searchsorted(self._knots, w, side="right") - 1
        inside = (segment >= 0) & (segment < len(self._knots) - 1)
        segment = np.clip(segment, 0, len(self._knots) - 2)

        slopes = np.diff(self._knot_positions) / np.diff(self._knots)
        return np.where(inside, slopes[segment], 0.0)

    def quantile(self, p):
        return np.interp(p, self._positions, self._samples)


def make_empirical_pivot(samples: Sequence[float], name: str = "empirical") -> EmpiricalPivot:
    values = np.asarray(samples, dtype=float).ravel()
    finite = values[np.isfinite(values)]

    if len(finite) < MIN_EMPIRICAL_SAMPLES:
        raise InsufficientDataError(
            f"Need at least {MIN_EMPIRICAL_SAMPLES} finite samples, got {len(finite)}"
        )

    if len(finite) < len(values):
        logger.warning(f"Dropped {len(values) - len(finite)} non-finite samples")

    return EmpiricalPivot(finite, name=name)


def calibration_rng() -> np.random.Generator:
    return np.random.default_rng(CALIBRATION_SEED)


def calibrate(
    name: str,
    draw: Callable[[np.random.Generator, int], np.ndarray],
    draws: int = CALIBRATION_DRAWS,
) -> EmpiricalPivot:
    """Empirical pivot from `draws` values of draw(rng, size) on the calibration stream"""
    logger.info(f"Calibrating {name} from {draws} draws")
    return make_empirical_pivot(draw(calibration_rng(), draws), name=name)
