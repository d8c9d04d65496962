from dataclasses import dataclass, field

from jpm.errors import AlphabetError


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbols a_1 < ... < a_sigma; symbol indices are 1-based"""

    symbols: tuple[str, ...]
    _codes: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise AlphabetError("empty alphabet")
        for symbol in symbols:
            if len(symbol) != 1:
                raise AlphabetError(f"alphabet symbols must be single characters, got {symbol!r}")
        if any(a >= b for a, b in zip(symbols, symbols[1:])):
            raise AlphabetError(f"alphabet must be strictly increasing: {''.join(symbols)!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_codes", {s: code for code, s in enumerate(symbols)})

    @classmethod
    def infer(cls, raw_text: str) -> "Alphabet":
        return cls(tuple(sorted(set(raw_text))))

    @classmethod
    def parse(cls, spec: str) -> "Alphabet":
        """Explicit alphabet given as its characters, e.g. 'ACGT'"""
        return cls(tuple(sorted(set(spec))))

    @classmethod
    def synthetic(cls, sigma: int) -> "Alphabet":
        """a, b, c, ... for generated texts; continues past 'z' in Latin-1 order"""
        if sigma < 1:
            raise AlphabetError("empty alphabet")
        if sigma <= 26:
            return cls(tuple(chr(ord("a") + k) for k in range(sigma)))
        return cls(tuple(chr(0x100 + k) for k in range(sigma)))

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    def code(self, symbol: str) -> int:
        """0-based code used in internal arrays"""
        try:
            return self._codes[symbol]
        except KeyError:
            raise AlphabetError(f"character {symbol!r} is not in the alphabet") from None

    def index(self, symbol: str) -> int:
        return self.code(symbol) + 1

    def symbol(self, index: int) -> str:
        if not 1 <= index <= self.sigma:
            raise AlphabetError(f"symbol index {index} outside 1..{self.sigma}")
        return self.symbols[index - 1]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._codes

    def __str__(self) -> str:
        return "".join(self.symbols)
