from pydantic import BaseModel, validator


class CredibleInterval(BaseModel):
    lower: float
    upper: float
    credibility: float
    spent_upper: float

    class Config:
        allow_mutation = False

    @validator("lower")
    def lower_is_nonnegative(cls, value: float) -> float:
        if value < 0.0:
            raise ValueError(f"lower bound {value} is negative")
        return value

    @validator("upper")
    def upper_not_below_lower(cls, value: float, values) -> float:
        lower = values.get("lower")
        if lower is not None and value < lower:
            raise ValueError(f"upper bound {value} is below lower bound {lower}")
        return value

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper
