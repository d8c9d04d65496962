import itertools
import math

import numpy as np
import pytest

from jpm import settings
from jpm.core import encode
from jpm.models import Alphabet, EncodedText, ParikhVector

# worked examples
BINARY_TEXT = "ababbaabaabbbaaabbab"
EXAMPLE_TEXT = "cabcccaaabccbaacca"
WAVELET_TEXT = "bbacaccabaddabccaaac"

BINARY_PMIN = [0, 0, 0, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7, 7, 8, 8, 9, 9, 10]
BINARY_PMAX = [1, 2, 3, 3, 4, 4, 4, 5, 5, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10]


def pytest_collection_modifyitems(config, items):
    if settings.SLOW_TESTS:
        return
    skip_slow = pytest.mark.skip(reason="set JPM_SLOW_TESTS=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def example_text() -> EncodedText:
    return encode(EXAMPLE_TEXT)


@pytest.fixture
def binary_text() -> EncodedText:
    return encode(BINARY_TEXT)


@pytest.fixture
def wavelet_text() -> EncodedText:
    return encode(WAVELET_TEXT)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


def random_text(rng: np.random.Generator, n: int, sigma: int) -> EncodedText:
    return EncodedText(Alphabet.synthetic(sigma), rng.integers(0, sigma, size=n))


# brute-force oracles


def brute_occurrences(text: EncodedText, q: ParikhVector) -> list[int]:
    """Every window of length |q| counted from scratch"""
    m, codes = q.length, text.codes.tolist()
    target = list(q.counts)
    starts = []
    for i in range(text.n - m + 1):
        counts = [0] * text.sigma
        for code in codes[i : i + m]:
            counts[code] += 1
        if counts == target:
            starts.append(i + 1)
    return starts


def naive_prv(text: EncodedText, j: int) -> list[int]:
    counts = [0] * text.sigma
    for code in text.codes[:j].tolist():
        counts[code] += 1
    return counts


def naive_firstfit(text: EncodedText, p) -> float:
    counts = [0] * text.sigma
    if all(v <= 0 for v in p):
        return 0
    for i, code in enumerate(text.codes.tolist(), 1):
        counts[code] += 1
        if all(c >= v for c, v in zip(counts, p)):
            return i
    return math.inf


def all_texts(sigma: int, max_len: int):
    alphabet = Alphabet.synthetic(sigma)
    for n in range(1, max_len + 1):
        for word in itertools.product(range(sigma), repeat=n):
            yield EncodedText(alphabet, np.asarray(word, dtype=np.int64))


def compositions(total: int, parts: int):
    """All Parikh vectors of length ``total`` with ``parts`` components"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def substring_vectors(text: EncodedText) -> set[tuple[int, ...]]:
    """Parikh vectors of all non-empty substrings"""
    codes = text.codes.tolist()
    found = set()
    for i in range(text.n):
        counts = [0] * text.sigma
        for code in codes[i:]:
            counts[code] += 1
            found.add(tuple(counts))
    return found
