import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jpm.errors import PositionError
from jpm.wavelet import INFEASIBLE, RankSelectBitVector, bv_rank, bv_select

SIZES = [0, 1, 2, 63, 64, 65, 511, 512, 513, 1000, 4096, 4097, 20_000]


def check_laws(bits: np.ndarray) -> None:
    v = RankSelectBitVector(bits)
    ones = np.concatenate(([0], np.cumsum(bits, dtype=np.int64)))
    n = bits.size
    for i in range(n + 1):
        assert v.rank1(i) == ones[i]
        assert v.rank0(i) + v.rank1(i) == i
    one_positions = (np.flatnonzero(bits) + 1).tolist()
    zero_positions = (np.flatnonzero(~bits) + 1).tolist()
    for j, pos in enumerate(one_positions, 1):
        assert v.select1(j) == pos
        assert v.rank1(pos) == j
    for j, pos in enumerate(zero_positions, 1):
        assert v.select0(j) == pos
        assert v.rank0(pos) == j
    assert v.select1(len(one_positions) + 1) == INFEASIBLE
    assert v.select0(len(zero_positions) + 1) == INFEASIBLE
    for i in range(1, n + 1):
        assert v.select(v[i], v.rank(v[i], i)) == i


def test_small_examples():
    v = RankSelectBitVector("1010")
    assert bv_rank(v, 1, 3) == 2
    assert bv_rank(v, 0, 0) == 0
    assert bv_select(v, 1, 2) == 3
    assert bv_select(v, 0, 0) == 0
    assert bv_select(v, 1, 3) == INFEASIBLE
    assert str(v) == "1010"
    assert [v[i] for i in range(1, 5)] == [1, 0, 1, 0]


def test_range_errors():
    v = RankSelectBitVector("1010")
    with pytest.raises(PositionError):
        v.rank1(5)
    with pytest.raises(PositionError):
        v.rank0(-1)
    with pytest.raises(PositionError):
        v[0]


@pytest.mark.parametrize("n", SIZES)
def test_degenerate_families(n):
    check_laws(np.zeros(n, dtype=bool))
    check_laws(np.ones(n, dtype=bool))
    check_laws(np.arange(n) % 2 == 0)


@pytest.mark.parametrize("n", SIZES)
@pytest.mark.parametrize("density", [0.01, 0.5, 0.97])
def test_random_vectors(rng, n, density):
    check_laws(rng.random(n) < density)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.booleans(), max_size=1500))
def test_laws_on_arbitrary_vectors(bits):
    check_laws(np.asarray(bits, dtype=bool))


def test_many_random_pairs_against_popcount(rng):
    bits = rng.random(200_000) < 0.3
    v = RankSelectBitVector(bits)
    ones = np.concatenate(([0], np.cumsum(bits, dtype=np.int64)))
    for i in rng.integers(0, bits.size + 1, size=100_000).tolist():
        assert v.rank1(i) == ones[i]


@pytest.mark.slow
def test_hundred_thousand_vectors(rng):
    for _ in range(100_000):
        check_laws(rng.random(int(rng.integers(0, 130))) < rng.random())


def test_auxiliary_space_ratio(rng):
    n = 1 << 16
    v = RankSelectBitVector(rng.random(n) < 0.5)
    assert v.aux_bits() <= 0.5 * n


def test_round_trip_bits(rng):
    bits = rng.random(777) < 0.4
    assert np.array_equal(RankSelectBitVector(bits).to_bits(), bits)
