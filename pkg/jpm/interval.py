"""Constant-time decision index for binary texts.

For each window length m the a_1-counts of the length-m windows form an
integer interval [pmin(m), pmax(m)]: shifting a window changes the count by
at most one. A query (x, y) therefore occurs iff pmin(x+y) <= x <= pmax(x+y).
"""
import logging
import threading
from dataclasses import dataclass

import numpy as np
import pandas as pd

from jpm.core import check_query
from jpm.errors import CapabilityError, PositionError
from jpm.helpers.csv_columns import interval_columns
from jpm.models import EncodedText, ParikhVector

logger = logging.getLogger(__name__)

UNFILLED = -1


@dataclass(frozen=True)
class FillResult:
    pmin: int
    pmax: int
    # start positions of the live query, reported only when this call swept the text
    occurrences: list[int] | None = None


class IntervalIndex:
    """pmin/pmax per window length, filled eagerly or on demand.

    Entries are published under a lock with the filled flag set last, so a
    concurrent reader sees an entry either unfilled or complete.
    """

    def __init__(self, text: EncodedText):
        if text.sigma != 2:
            raise CapabilityError("interval index requires binary alphabet")
        self.alphabet = text.alphabet
        self.n = text.n
        # prefix counts of the first symbol; the only view of the text the sweeps need
        self._prefix = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(text.codes == 0, out=self._prefix[1:])
        self.pmin = np.full(self.n + 1, UNFILLED, dtype=np.int64)
        self.pmax = np.full(self.n + 1, UNFILLED, dtype=np.int64)
        self.filled = np.zeros(self.n + 1, dtype=bool)
        self.sweeps = 0
        self.window_steps = 0
        self._lock = threading.Lock()

    @classmethod
    def build_eager(cls, text: EncodedText) -> "IntervalIndex":
        index = cls(text)
        for m in range(1, index.n + 1):
            index._sweep(m)
        logger.info("Built eager interval index: n=%d, %d window steps", index.n, index.window_steps)
        return index

    @classmethod
    def build_lazy(cls, text: EncodedText) -> "IntervalIndex":
        return cls(text)

    @property
    def a_count(self) -> int:
        return int(self._prefix[-1])

    def text_codes(self) -> np.ndarray:
        """The binary text rebuilt from the prefix counts (code 0 where the count steps up)"""
        return (1 - np.diff(self._prefix)).astype(np.uint8)

    def is_complete(self) -> bool:
        return bool(self.filled[1:].all())

    def _window_counts(self, m: int) -> np.ndarray:
        return self._prefix[m:] - self._prefix[:-m]

    def _sweep(self, m: int, x: int | None = None) -> list[int] | None:
        counts = self._window_counts(m)
        occurrences = (np.flatnonzero(counts == x) + 1).tolist() if x is not None else None
        with self._lock:
            self.sweeps += 1
            self.window_steps += counts.size
            if not self.filled[m]:
                self.pmin[m] = counts.min()
                self.pmax[m] = counts.max()
                self.filled[m] = True
        return occurrences

    def fill_lazy(self, m: int, query: ParikhVector | None = None) -> FillResult:
        """Fill entry m with one sweep; a live query gets its occurrences from the same sweep"""
        if not 1 <= m <= self.n:
            raise PositionError(f"window length {m} outside 1..{self.n}")
        if self.filled[m]:
            return FillResult(int(self.pmin[m]), int(self.pmax[m]))
        x = query.counts[0] if query is not None else None
        occurrences = self._sweep(m, x)
        logger.debug("Filled interval entry m=%d: [%d, %d]", m, self.pmin[m], self.pmax[m])
        return FillResult(int(self.pmin[m]), int(self.pmax[m]), occurrences)

    def decide(self, q: ParikhVector) -> bool:
        check_query(q, 2)
        m = q.length
        if m > self.n:
            return False
        if not self.filled[m]:
            self.fill_lazy(m, q)
        return bool(self.pmin[m] <= q.counts[0] <= self.pmax[m])

    def occurrences(self, q: ParikhVector) -> list[int]:
        """All start positions of q by a window sweep (fills the entry on the way)"""
        check_query(q, 2)
        m = q.length
        if m > self.n:
            return []
        return self._sweep(m, q.counts[0])

    def entry(self, m: int) -> tuple[int, int] | None:
        if not self.filled[m]:
            return None
        return int(self.pmin[m]), int(self.pmax[m])

    def to_frame(self) -> pd.DataFrame:
        filled = np.flatnonzero(self.filled)
        frame = pd.DataFrame({"m": filled, "pmin": self.pmin[filled], "pmax": self.pmax[filled]})
        return frame[interval_columns]

    def to_csv(self, path) -> None:
        self.to_frame().to_csv(path, index=False)

    def same_table(self, other: "IntervalIndex") -> bool:
        return (
            self.n == other.n
            and np.array_equal(self.filled, other.filled)
            and np.array_equal(self.pmin, other.pmin)
            and np.array_equal(self.pmax, other.pmax)
        )

    @classmethod
    def restore(cls, text: EncodedText, pmin: np.ndarray, pmax: np.ndarray, filled: np.ndarray) -> "IntervalIndex":
        index = cls(text)
        index.pmin[:] = pmin
        index.pmax[:] = pmax
        index.filled[:] = filled
        return index


def build_eager(text: EncodedText) -> IntervalIndex:
    return IntervalIndex.build_eager(text)


def decide(index: IntervalIndex, q: ParikhVector) -> bool:
    return index.decide(q)


def fill_lazy(index: IntervalIndex, m: int, query: ParikhVector | None = None) -> FillResult:
    return index.fill_lazy(m, query)
