from pydantic import BaseModel


class TrendReport(BaseModel):
    """Least-squares fit of mean J against c * n / sqrt(m sigma ln sigma)"""

    coefficient: float  # c, fitted with the exponent of m pinned to -1/2
    exponent: float  # free slope of log J over log m
    intercept: float
    residuals: list[float]
    lengths: list[float]
    mean_jumps: list[float]
    decrease_factor: float  # J(m_lo) / J(m_hi)
    required_factor: float  # sqrt(m_hi / m_lo) / 2
    flagged: bool
    reasons: list[str] = []
