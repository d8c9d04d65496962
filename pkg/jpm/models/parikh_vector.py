from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from jpm.errors import DimensionError, NegativeComponentError


@dataclass(frozen=True)
class ParikhVector:
    """Per-symbol multiplicities; component k-1 counts symbol a_k"""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise NegativeComponentError(f"Parikh vector components must be non-negative: {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def of(cls, counts: Iterable[int]) -> "ParikhVector":
        return cls(tuple(counts))

    @classmethod
    def zero(cls, sigma: int) -> "ParikhVector":
        return cls((0,) * sigma)

    @property
    def sigma(self) -> int:
        return len(self.counts)

    @property
    def length(self) -> int:
        return sum(self.counts)

    def is_zero(self) -> bool:
        return not any(self.counts)

    def _check_dim(self, other: "ParikhVector") -> None:
        if self.sigma != other.sigma:
            raise DimensionError(f"dimension mismatch: {self.sigma} != {other.sigma}")

    def __le__(self, other: "ParikhVector") -> bool:
        self._check_dim(other)
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def __ge__(self, other: "ParikhVector") -> bool:
        return other <= self

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        self._check_dim(other)
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "ParikhVector") -> "ParikhVector":
        self._check_dim(other)
        diff = tuple(a - b for a, b in zip(self.counts, other.counts))
        if any(d < 0 for d in diff):
            raise NegativeComponentError(f"{self.counts} - {other.counts} has a negative component")
        return ParikhVector(diff)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + ")"
