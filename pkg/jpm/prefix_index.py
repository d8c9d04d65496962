"""Inverted prefix table.

Row k lists the positions of symbol a_k: I[k][0] = 0 and I[k][j] is the
position of its j-th occurrence. All rows share one flat block addressed by
per-symbol offsets, so the table stores exactly n + sigma integers and the
text itself can be discarded.
"""
import logging
import math
from bisect import bisect_left
from collections.abc import Sequence

import numpy as np

from jpm.errors import ContractViolation, DimensionError, PositionError
from jpm.models import Alphabet, EncodedText, ParikhVector, ProbeCounter

logger = logging.getLogger(__name__)

INFEASIBLE = math.inf


class InvertedPrefixTable:
    def __init__(self, alphabet: Alphabet, n: int, totals: Sequence[int], block: Sequence[int]):
        self.alphabet = alphabet
        self.n = n
        self.sigma = alphabet.sigma
        self.totals = [int(c) for c in totals]
        self.offsets = [0] * self.sigma
        for k in range(1, self.sigma):
            self.offsets[k] = self.offsets[k - 1] + self.totals[k - 1] + 1
        # python ints: the search loops index this block millions of times
        self.block = [int(v) for v in block]
        if sum(self.totals) != n or len(self.block) != n + self.sigma:
            raise ValueError("row totals do not match the text length")

    @classmethod
    def build(cls, text: EncodedText) -> "InvertedPrefixTable":
        sigma, n = text.sigma, text.n
        totals = np.bincount(text.codes, minlength=sigma).tolist()
        offsets = [0] * sigma
        for k in range(1, sigma):
            offsets[k] = offsets[k - 1] + totals[k - 1] + 1
        block = [0] * (n + sigma)
        c = [0] * sigma
        for i, code in enumerate(text.codes.tolist(), 1):
            c[code] += 1
            block[offsets[code] + c[code]] = i
        logger.info("Built inverted prefix table: n=%d, sigma=%d", n, sigma)
        return cls(text.alphabet, n, totals, block)

    def row(self, k: int) -> list[int]:
        """Row of symbol index k (1-based), including the leading 0"""
        off = self.offsets[k - 1]
        return self.block[off : off + self.totals[k - 1] + 1]

    def _check_dim(self, p: Sequence[int]) -> None:
        if len(p) != self.sigma:
            raise DimensionError(f"vector has dimension {len(p)}, table has {self.sigma} rows")

    def firstfit(self, p: Sequence[int], counter: ProbeCounter | None = None) -> int | float:
        """min{ j : prv(j) >= p } as the max over rows of I[k][p_k]; INFEASIBLE if some p_k > c_k"""
        self._check_dim(p)
        if counter is not None:
            counter.firstfit_calls += 1
            counter.lookups += self.sigma
        block, offsets, totals = self.block, self.offsets, self.totals
        best = 0
        for k in range(self.sigma):
            pk = p[k]
            if pk > totals[k]:
                return INFEASIBLE
            pos = block[offsets[k] + pk]
            if pos > best:
                best = pos
        return best

    def prv(
        self,
        j: int,
        lo: Sequence[int] | None = None,
        hi: Sequence[int] | None = None,
        counter: ProbeCounter | None = None,
    ) -> list[int]:
        """prv(j) by binary search of each row inside the window [lo_k, hi_k].

        The answer satisfies sum_k prv(j)_k = j, so the slack j - sum(lo)
        caps every window and shrinks as symbols resolve; the last symbol
        with a non-trivial window is deduced without probes.
        """
        if not 0 <= j <= self.n:
            raise PositionError(f"prefix length {j} outside 0..{self.n}")
        sigma, block, offsets, totals = self.sigma, self.block, self.offsets, self.totals
        if lo is None:
            lo = [0] * sigma
        else:
            self._check_dim(lo)
            lo = [min(max(v, 0), totals[k]) for k, v in enumerate(lo)]
        if hi is None:
            hi = list(totals)
        else:
            self._check_dim(hi)
            hi = [min(max(v, lo[k]), totals[k]) for k, v in enumerate(hi)]
        for k in range(sigma):
            off = offsets[k]
            if block[off + lo[k]] > j or (hi[k] < totals[k] and block[off + hi[k] + 1] <= j):
                raise ContractViolation(f"hint [{lo[k]}, {hi[k]}] does not bracket prv({j}) in row {k + 1}")
        slack = j - sum(lo)
        if slack < 0:
            raise ContractViolation(f"hint lower bounds sum past {j}")

        result = lo
        pending = [k for k in range(sigma) if hi[k] > lo[k]]
        probes = 0
        for idx, k in enumerate(pending):
            if slack == 0:
                break
            a = lo[k]
            if idx == len(pending) - 1:
                result[k] = a + slack
                break
            b = min(hi[k], a + slack)
            off = offsets[k]
            while a < b:
                mid = (a + b + 1) >> 1
                probes += 1
                if block[off + mid] <= j:
                    a = mid
                else:
                    b = mid - 1
            slack -= a - lo[k]
            result[k] = a
        if counter is not None:
            counter.prv_calls += 1
            counter.search_probes += probes
        return result

    def char_at(self, i: int) -> int:
        """Symbol index at position i, by one binary search per row"""
        if not 1 <= i <= self.n:
            raise PositionError(f"position {i} outside 1..{self.n}")
        for k in range(self.sigma):
            off = self.offsets[k]
            end = off + self.totals[k] + 1
            at = bisect_left(self.block, i, off + 1, end)
            if at < end and self.block[at] == i:
                return k + 1
        raise AssertionError(f"position {i} is in no row")

    def to_codes(self) -> np.ndarray:
        codes = np.empty(self.n, dtype=np.int64)
        for k in range(self.sigma):
            off = self.offsets[k]
            positions = np.asarray(self.block[off + 1 : off + self.totals[k] + 1], dtype=np.int64)
            codes[positions - 1] = k
        return codes

    def to_text(self) -> EncodedText:
        return EncodedText(self.alphabet, self.to_codes())

    def block_array(self) -> np.ndarray:
        return np.asarray(self.block, dtype=np.int64)


def build_table(text: EncodedText) -> InvertedPrefixTable:
    return InvertedPrefixTable.build(text)


def firstfit_table(tbl: InvertedPrefixTable, p: ParikhVector) -> int | float:
    return tbl.firstfit(p.counts)


def prv_bounded(
    tbl: InvertedPrefixTable,
    j: int,
    hint: tuple[Sequence[int], Sequence[int]] | None = None,
    counter: ProbeCounter | None = None,
) -> ParikhVector:
    lo, hi = hint if hint is not None else (None, None)
    return ParikhVector.of(tbl.prv(j, lo, hi, counter))
