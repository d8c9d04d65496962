"""Rank/select bit vector.

Bits are packed little-endian into 64-bit words. Rank uses absolute counts
per 512-bit superblock plus counts relative to the superblock per word, then
one popcount. Select narrows by a sample of every 512th bit of each kind,
binary searches superblocks, scans at most eight words and finishes inside
a single word. Positions are 1-based: rank_b(i) counts b-bits among
positions 1..i and select_b(j) is the position of the j-th b-bit.
"""
import math
from collections.abc import Iterable

import numpy as np

from jpm.errors import PositionError

INFEASIBLE = math.inf

WORD = 64
SUPERBLOCK = 512
WORDS_PER_SUPERBLOCK = SUPERBLOCK // WORD
SAMPLE = 512
_BLOCK_COUNT_BITS = 9  # relative counts stay below 512


class RankSelectBitVector:
    def __init__(self, bits: Iterable[int] | np.ndarray | str):
        if isinstance(bits, str):
            bits = [int(b) for b in bits]
        array = np.asarray(bits, dtype=bool).ravel()
        self.size = int(array.size)
        padded = np.zeros((self.size // WORD + 1) * WORD, dtype=bool)
        padded[: self.size] = array
        packed = np.packbits(padded, bitorder="little").view("<u8")
        # one spare zero word keeps rank(size) in range when size % 64 == 0
        self.words: list[int] = [int(w) for w in packed]
        popcounts = [w.bit_count() for w in self.words]

        self.superblocks: list[int] = []
        self.blocks: list[int] = []
        running = 0
        for w, count in enumerate(popcounts):
            if w % WORDS_PER_SUPERBLOCK == 0:
                self.superblocks.append(running)
            self.blocks.append(running - self.superblocks[-1])
            running += count
        self.ones = running
        self.zeros = self.size - self.ones
        self._samples = {1: self._sample(1), 0: self._sample(0)}

    def _sample(self, bit: int) -> list[int]:
        """Superblock holding the (t*SAMPLE + 1)-th b-bit, for t = 0, 1, ..."""
        total = self.ones if bit else self.zeros
        samples = []
        sb = 0
        for target in range(1, total + 1, SAMPLE):
            while sb + 1 < len(self.superblocks) and self._before_superblock(bit, sb + 1) < target:
                sb += 1
            samples.append(sb)
        return samples

    def _before_superblock(self, bit: int, sb: int) -> int:
        ones = self.superblocks[sb]
        return ones if bit else sb * SUPERBLOCK - ones

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, i: int) -> int:
        """Bit at 1-based position i"""
        if not 1 <= i <= self.size:
            raise PositionError(f"bit position {i} outside 1..{self.size}")
        i -= 1
        return (self.words[i >> 6] >> (i & 63)) & 1

    def rank1(self, i: int) -> int:
        if not 0 <= i <= self.size:
            raise PositionError(f"rank position {i} outside 0..{self.size}")
        w = i >> 6
        return (
            self.superblocks[w >> 3]
            + self.blocks[w]
            + (self.words[w] & ((1 << (i & 63)) - 1)).bit_count()
        )

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, bit: int, i: int) -> int:
        return self.rank1(i) if bit else self.rank0(i)

    def select(self, bit: int, j: int | float) -> int | float:
        if j == 0:
            return 0
        total = self.ones if bit else self.zeros
        if j > total or j < 0:
            return INFEASIBLE
        j = int(j)

        # superblock: last one whose preceding count is < j
        samples = self._samples[bit]
        t = (j - 1) // SAMPLE
        lo = samples[t]
        hi = samples[t + 1] if t + 1 < len(samples) else len(self.superblocks) - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if self._before_superblock(bit, mid) < j:
                lo = mid
            else:
                hi = mid - 1
        remaining = j - self._before_superblock(bit, lo)

        # word inside the superblock
        first = lo * WORDS_PER_SUPERBLOCK
        last = min(first + WORDS_PER_SUPERBLOCK, len(self.words)) - 1
        w = first
        while w < last:
            nxt = self.blocks[w + 1] if bit else (w + 1 - first) * WORD - self.blocks[w + 1]
            if nxt >= remaining:
                break
            w += 1
        before = self.blocks[w] if bit else (w - first) * WORD - self.blocks[w]
        remaining -= before

        word = self.words[w] if bit else ~self.words[w] & 0xFFFFFFFFFFFFFFFF
        for _ in range(remaining - 1):
            word &= word - 1
        return w * WORD + (word & -word).bit_length()

    def select1(self, j: int | float) -> int | float:
        return self.select(1, j)

    def select0(self, j: int | float) -> int | float:
        return self.select(0, j)

    def aux_bits(self) -> int:
        """Nominal size of the rank/select directories in bits"""
        absolute = max(1, math.ceil(math.log2(self.size + 1)))
        sample_width = max(1, math.ceil(math.log2(len(self.superblocks) + 1)))
        samples = len(self._samples[0]) + len(self._samples[1])
        return len(self.superblocks) * absolute + len(self.blocks) * _BLOCK_COUNT_BITS + samples * sample_width

    def to_bits(self) -> np.ndarray:
        packed = np.asarray(self.words, dtype="<u8").view(np.uint8)
        return np.unpackbits(packed, bitorder="little")[: self.size].astype(bool)

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bits())


def bv_rank(v: RankSelectBitVector, b: int, i: int) -> int:
    return v.rank(b, i)


def bv_select(v: RankSelectBitVector, b: int, j: int) -> int | float:
    return v.select(b, j)
