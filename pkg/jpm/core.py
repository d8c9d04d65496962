"""Alphabet handling, Parikh-vector arithmetic and the sliding-window matcher.

The window matcher is the reference every index is checked against: it
keeps the Parikh vector ``c`` of the current length-m window and a counter
``r`` of symbols whose count differs from the query, so each shift costs O(1).
"""
import logging
from dataclasses import dataclass

import numpy as np

from jpm.errors import DimensionError, EmptyQueryError, InvariantViolation, PositionError
from jpm.models import Alphabet, EncodedText, Occurrence, ParikhVector

logger = logging.getLogger(__name__)


def infer_alphabet(raw_text: str) -> Alphabet:
    return Alphabet.infer(raw_text)


def encode(raw_text: str, alphabet: Alphabet | None = None) -> EncodedText:
    return EncodedText.encode(raw_text, alphabet)


def parikh(text: EncodedText, start: int = 1, end: int | None = None) -> ParikhVector:
    """Parikh vector of s[start..end] (1-based, inclusive); start = end + 1 is the empty segment"""
    end = text.n if end is None else end
    if start < 1 or end > text.n or start > end + 1:
        raise PositionError(f"segment [{start}, {end}] outside text of length {text.n}")
    segment = text.codes[start - 1 : end]
    return ParikhVector.of(np.bincount(segment, minlength=text.sigma).tolist())


def prefix_vector(text: EncodedText, j: int) -> ParikhVector:
    return parikh(text, 1, j)


def pv_leq(p: ParikhVector, q: ParikhVector) -> bool:
    return p <= q


def pv_add(p: ParikhVector, q: ParikhVector) -> ParikhVector:
    return p + q


def pv_sub(p: ParikhVector, q: ParikhVector) -> ParikhVector:
    return p - q


def check_query(q: ParikhVector, sigma: int) -> None:
    if q.sigma != sigma:
        raise DimensionError(f"query has dimension {q.sigma}, alphabet has {sigma} symbols")
    if q.is_zero():
        raise EmptyQueryError()


@dataclass
class WindowScan:
    starts: list[int]
    # window positions examined (the baseline's unit of work)
    steps: int

    def occurrences(self, m: int) -> list[Occurrence]:
        return [Occurrence(i, i + m - 1) for i in self.starts]


def window_scan(text: EncodedText, q: ParikhVector, *, recount_every: int = 0) -> WindowScan:
    """Slide a window of size |q| over the text, returning every start position.

    ``recount_every`` > 0 enables the checked mode: every that many shifts
    the maintained window vector is compared with a fresh count.
    """
    check_query(q, text.sigma)
    n, m = text.n, q.length
    if m > n:
        return WindowScan([], 0)

    s = text.codes.tolist()
    target = list(q.counts)
    c = [0] * text.sigma
    for code in s[:m]:
        c[code] += 1
    r = sum(1 for k in range(text.sigma) if c[k] != target[k])

    starts = [1] if r == 0 else []
    for i in range(m, n):
        out, into = s[i - m], s[i]
        if out != into:
            # leaving symbol
            if c[out] == target[out]:
                r += 1
            c[out] -= 1
            if c[out] == target[out]:
                r -= 1
            # entering symbol
            if c[into] == target[into]:
                r += 1
            c[into] += 1
            if c[into] == target[into]:
                r -= 1
        if r == 0:
            starts.append(i - m + 2)
        if recount_every and (i - m + 1) % recount_every == 0:
            fresh = np.bincount(text.codes[i - m + 1 : i + 1], minlength=text.sigma).tolist()
            if fresh != c:
                raise InvariantViolation(f"window vector {c} drifted from recount {fresh} at shift {i - m + 1}")
    return WindowScan(starts, n - m + 1)


def window_search(text: EncodedText, q: ParikhVector) -> list[Occurrence]:
    return window_scan(text, q).occurrences(q.length)
