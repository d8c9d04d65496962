import math

from pydantic import BaseModel, root_validator, validator

from jpm.models.backend_choices import BackendChoices
from jpm.models.query_model_choices import QueryModelChoices


class ExperimentConfig(BaseModel):
    n: int
    sigma: int
    query_model: QueryModelChoices = QueryModelChoices.QUASI_BALANCED
    epsilon: int = 10
    # defaults to log2(n) .. sqrt(n)
    m_lo: int | None = None
    m_hi: int | None = None
    m_points: int = 8
    # explicit query lengths override the m_lo/m_hi grid
    m_values: list[int] | None = None
    reps: int = 10
    queries_per_text: int = 10
    seed: int = 0
    backends: list[BackendChoices] = [BackendChoices.TABLE]
    baseline: bool = False
    timing: bool = True
    timing_repeats: int = 3
    workers: int = 1

    class Config:
        validate_assignment = True
        use_enum_values = False

    @validator("n", "sigma", "reps", "queries_per_text", "m_points", "workers")
    def positive(cls, value, field):
        if value < 1:
            raise ValueError(f"{field.name} must be >= 1")
        return value

    @validator("epsilon")
    def epsilon_at_least_one(cls, value):
        if value < 1:
            raise ValueError("epsilon must be >= 1")
        return value

    @validator("timing_repeats")
    def at_least_three_repeats(cls, value):
        if value < 3:
            raise ValueError("timing_repeats must be >= 3")
        return value

    @validator("backends")
    def jumping_backends_only(cls, value):
        if not value:
            raise ValueError("at least one back-end is required")
        if BackendChoices.INTERVAL in value:
            raise ValueError("the interval back-end answers decisions only and cannot run jump experiments")
        return value

    @root_validator(skip_on_failure=True)
    def m_range(cls, values):
        n = values["n"]
        if values.get("m_values"):
            bad = [m for m in values["m_values"] if not 1 <= m <= n]
            if bad:
                raise ValueError(f"query lengths {bad} outside 1..{n}")
            return values
        m_lo = values.get("m_lo") or max(1, int(math.log2(n)))
        m_hi = values.get("m_hi") or max(m_lo, math.isqrt(n))
        if m_lo < 1:
            raise ValueError("m_lo must be >= 1")
        if m_hi > n:
            raise ValueError("m_hi must be <= n")
        if m_lo > m_hi:
            raise ValueError("m_lo must be <= m_hi")
        values["m_lo"], values["m_hi"] = m_lo, m_hi
        return values

    def lengths(self) -> list[int]:
        """Query lengths of the experiment grid, log-spaced between m_lo and m_hi"""
        if self.m_values:
            return sorted(set(self.m_values))
        if self.m_points == 1 or self.m_lo == self.m_hi:
            return [self.m_lo]
        ratio = (self.m_hi / self.m_lo) ** (1 / (self.m_points - 1))
        grid = {round(self.m_lo * ratio**i) for i in range(self.m_points)}
        return sorted(m for m in grid if self.m_lo <= m <= self.m_hi)
