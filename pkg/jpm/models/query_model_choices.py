from enum import Enum


class QueryModelChoices(str, Enum):
    QUASI_BALANCED = "quasi-balanced"
    FIXED_LENGTH = "fixed-length"
