from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, root_validator, validator

from bounded_credible.coverage import MIN_REPLICATES
from bounded_credible.models import MODEL_NAMES
from bounded_credible.spending import DEFAULT_VALIDATION_POINTS, SPENDING_NAMES

MODEL_PARAMETER_FIELDS = ("shape", "shapes", "a", "n", "eta", "weights", "component")


class Command(Enum):
    interval = "interval"
    coverage = "coverage"
    validate = "validate"


class OutputFormat(Enum):
    csv = "csv"
    tsv = "tsv"

    @property
    def delimiter(self) -> str:
        return "\t" if self is OutputFormat.tsv else ","


class RunConfig(BaseModel):
    command: Command
    model: str = "location-normal"
    alpha: float = 0.05
    spending: str = "equal-tails"
    band_weight: Optional[float] = None

    shape: Optional[float] = None
    shapes: Optional[List[float]] = None
    a: Optional[float] = None
    n: Optional[int] = None
    eta: Optional[float] = None
    weights: Optional[List[float]] = None
    component: Optional[str] = None

    x: Optional[List[float]] = None
    tau_min: float = 0.0
    tau_max: float = 5.0
    grid: Optional[int] = None
    reps: int = 100_000
    seed: int = 0
    max_concurrency: int = 4
    quadrature_nodes: int = 100_000

    output: Optional[str] = None
    format: OutputFormat = OutputFormat.csv

    class Config:
        extra = "forbid"

    @validator("shapes", "weights", "x", pre=True)
    def split_comma_list(cls, value):
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @validator("alpha")
    def alpha_in_unit_interval(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {value}")
        return value

    @validator("model")
    def model_is_known(cls, value: str) -> str:
        if value not in MODEL_NAMES:
            raise ValueError(f"unknown model {value}, expected one of {MODEL_NAMES}")
        return value

    @validator("spending")
    def spending_is_known(cls, value: str) -> str:
        if value not in SPENDING_NAMES:
            raise ValueError(
                f"unknown spending {value}, expected one of {SPENDING_NAMES}"
            )
        return value

    @validator("max_concurrency", "quadrature_nodes")
    def positive_count(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be at least 1, got {value}")
        return value

    @root_validator(skip_on_failure=True)
    def command_requirements(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        command = values["command"]

        if command is Command.coverage:
            if values["reps"] < MIN_REPLICATES:
                raise ValueError(
                    f"coverage needs at least {MIN_REPLICATES} replicates, got {values['reps']}"
                )
            if values["grid"] is None:
                values["grid"] = 51

        if command is Command.validate and values["grid"] is None:
            values["grid"] = DEFAULT_VALIDATION_POINTS

        if command is Command.interval and not values["x"]:
            raise ValueError("interval needs an observation --x")

        if values["grid"] is not None and values["grid"] < 1:
            raise ValueError(f"grid must have at least one point, got {values['grid']}")

        return values

    def model_params(self) -> Dict[str, Any]:
        return {
            field: getattr(self, field)
            for field in MODEL_PARAMETER_FIELDS
            if getattr(self, field) is not None
        }
