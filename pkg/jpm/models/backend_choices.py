from enum import Enum


class BackendChoices(str, Enum):
    TABLE = "table"
    WAVELET = "wavelet"
    INTERVAL = "interval"

    @property
    def jumps(self) -> bool:
        return self is not BackendChoices.INTERVAL
