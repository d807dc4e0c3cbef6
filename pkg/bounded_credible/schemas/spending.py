from enum import Enum
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel


class SpendingName(Enum):
    equal_tails = "equal-tails"
    hpd_symmetric = "hpd-symmetric"
    band_lower = "band-lower"
    band_upper = "band-upper"
    custom = "custom"


class SpendingFunction(BaseModel):
    """
    Map t(x) -> alpha(x) in [0, alpha].

    `rule` is evaluated elementwise on numpy arrays of t and never raises;
    `label` distinguishes custom rules that share SpendingName.custom.
    """

    alpha: float
    name: SpendingName
    label: str
    rule: Callable[[np.ndarray], np.ndarray]
    y0: float

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True

    def __call__(self, t):
        return self.rule(np.asarray(t, dtype=float))


class ValidationPoint(BaseModel):
    t: float
    alpha_x: float
    band_lo: float
    band_hi: float
    passed: bool


class ValidationReport(BaseModel):
    spending: str
    pivot: str
    alpha: float
    y0: float
    points: List[ValidationPoint]
    passed: bool
    first_failure: Optional[float] = None

    @property
    def failures(self) -> List[ValidationPoint]:
        return [point for point in self.points if not point.passed]
