from enum import Enum


class QueryModeChoices(str, Enum):
    DECISION = "decision"
    OCCURRENCES = "occurrences"
