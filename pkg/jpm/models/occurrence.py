from dataclasses import dataclass

from jpm.errors import PositionError


@dataclass(frozen=True, order=True)
class Occurrence:
    start: int
    end: int

    def __post_init__(self):
        if not 1 <= self.start <= self.end:
            raise PositionError(f"invalid occurrence ({self.start}, {self.end})")

    @property
    def length(self) -> int:
        return self.end - self.start + 1
