from dataclasses import dataclass

import numpy as np

from jpm.errors import AlphabetError, PositionError
from jpm.models.alphabet import Alphabet


@dataclass(frozen=True, eq=False)
class EncodedText:
    """A text over ``alphabet`` stored as 0-based symbol codes.

    Externally positions run 1..n and symbols are indexed 1..sigma; the
    ``codes`` array is the private 0-based layout (code = index - 1).
    """

    alphabet: Alphabet
    codes: np.ndarray

    def __post_init__(self):
        dtype = np.uint8 if self.alphabet.sigma <= 256 else np.uint32
        codes = np.ascontiguousarray(self.codes, dtype=dtype)
        if codes.ndim != 1:
            raise ValueError("codes must be one-dimensional")
        if codes.size and int(codes.max()) >= self.alphabet.sigma:
            raise AlphabetError(f"code {int(codes.max())} outside alphabet of size {self.alphabet.sigma}")
        codes.setflags(write=False)
        object.__setattr__(self, "codes", codes)

    @classmethod
    def encode(cls, raw_text: str, alphabet: Alphabet | None = None) -> "EncodedText":
        alphabet = alphabet or Alphabet.infer(raw_text)
        lookup = alphabet.code
        return cls(alphabet, np.fromiter((lookup(ch) for ch in raw_text), dtype=np.int64, count=len(raw_text)))

    @property
    def n(self) -> int:
        return int(self.codes.size)

    @property
    def sigma(self) -> int:
        return self.alphabet.sigma

    def __len__(self) -> int:
        return self.n

    def symbol_at(self, i: int) -> int:
        """1-based symbol index at 1-based position i"""
        if not 1 <= i <= self.n:
            raise PositionError(f"position {i} outside 1..{self.n}")
        return int(self.codes[i - 1]) + 1

    def decode(self) -> str:
        symbols = self.alphabet.symbols
        return "".join(symbols[c] for c in self.codes.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EncodedText):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.codes, other.codes)

    __hash__ = None

    def __repr__(self) -> str:
        preview = self.decode()[:32]
        return f"EncodedText(n={self.n}, alphabet={str(self.alphabet)!r}, text={preview!r}{'...' if self.n > 32 else ''})"
