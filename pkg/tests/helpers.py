from typing import Any, Dict, List, Tuple

import numpy as np

from bounded_credible.pivots import get_pivot
from bounded_credible.schemas.pivots import PivotDistribution

CATALOG_PIVOT_PARAMS: List[Tuple[str, Dict[str, Any]]] = [
    ("normal", {}),
    ("student-t", {"df": 1}),
    ("student-t", {"df": 5}),
    ("student-t", {"df": 30}),
    ("logistic", {}),
    ("laplace", {}),
    ("exponential", {}),
    ("shifted-exponential", {}),
    ("log-gamma", {"shape": 2.0}),
    ("log-gamma", {"shape": 0.5}),
    ("log-weibull", {"shape": 1.5}),
    ("log-exponential", {}),
    ("log-ratio-gamma", {"shape1": 2.0, "shape2": 1.0}),
    ("log-ratio-gamma", {"shape1": 3.0, "shape2": 3.0}),
]

SYMMETRIC_PIVOT_PARAMS = [
    ("normal", {}),
    ("student-t", {"df": 1}),
    ("student-t", {"df": 5}),
    ("student-t", {"df": 30}),
    ("logistic", {}),
    ("laplace", {}),
    ("log-ratio-gamma", {"shape1": 3.0, "shape2": 3.0}),
]

CATALOG_MODEL_PARAMS: Dict[str, Dict[str, Any]] = {
    "location-normal": {},
    "location-laplace": {},
    "location-logistic": {},
    "location-shifted-exponential": {},
    "scale-gamma": {"shape": 2.0},
    "scale-weibull": {"shape": 1.5},
    "scale-exponential": {},
    "location-scale-normal": {"n": 10},
    "linear-combination": {"weights": [1.0, 1.0, 1.0], "component": "shifted-exponential"},
    "scale-ratio": {"shapes": [2.0, 1.0]},
    "quantile-normal": {"eta": 1.0, "n": 5},
    "homogeneous-scale-normal": {"weights": [1.0, -1.0], "n": 6},
}

CONSTANT_SCALE_MODELS = [
    "location-normal",
    "location-shifted-exponential",
    "scale-gamma",
    "linear-combination",
    "scale-ratio",
]


def pivot_id(case: Tuple[str, Dict[str, Any]]) -> str:
    name, params = case
    if not params:
        return name
    return f"{name}({','.join(f'{value:g}' for value in params.values())})"


def build_pivot(case: Tuple[str, Dict[str, Any]]) -> PivotDistribution:
    name, params = case
    return get_pivot(name, **params)


def random_cases(
    count: int, seed: int
) -> List[Tuple[float, float, float, float]]:
    """(a1, a2, alpha, fraction) draws; fraction in (0, 1] scales alpha_x"""
    rng = np.random.default_rng(seed)
    return [
        (
            float(rng.uniform(-2.0, 5.0)),
            float(rng.uniform(0.5, 3.0)),
            float(rng.uniform(0.01, 0.4)),
            float(rng.uniform(0.001, 1.0)),
        )
        for _ in range(count)
    ]
