from typing import List, Optional

from pydantic import BaseModel, validator


class CoveragePoint(BaseModel):
    tau: float
    estimate: float
    std_error: float
    quadrature: Optional[float]
    passed: bool


class CoverageReport(BaseModel):
    model: str
    spending: str
    alpha: float
    tau_grid: List[float]
    estimates: List[float]
    std_errors: List[float]
    quadrature: Optional[List[float]]
    min_coverage: float
    min_quadrature: Optional[float]
    bound: float
    boundary_value: Optional[float]
    grid_spacing: float
    verdict: bool
    replicates: int
    seed: int

    @validator("estimates", each_item=True)
    def estimate_is_probability(cls, value: float) -> float:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"coverage estimate {value} is not a probability")
        return value

    @property
    def verdict_label(self) -> str:
        return "pass" if self.verdict else "fail"

    @property
    def points(self) -> List[CoveragePoint]:
        quadrature = self.quadrature or [None] * len(self.tau_grid)
        return [
            CoveragePoint(
                tau=tau,
                estimate=estimate,
                std_error=std_error,
                quadrature=quadrature_value,
                passed=_point_passes(estimate, std_error, quadrature_value, self.bound),
            )
            for tau, estimate, std_error, quadrature_value in zip(
                self.tau_grid, self.estimates, self.std_errors, quadrature
            )
        ]


def _point_passes(
    estimate: float, std_error: float, quadrature: Optional[float], bound: float
) -> bool:
    if estimate + 3 * std_error < bound:
        return False
    return quadrature is None or quadrature > bound
