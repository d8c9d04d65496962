import logging
from dataclasses import dataclass
from pathlib import Path

from jpm.errors import TextFormatError
from jpm.models import Alphabet, EncodedText, TextFormatChoices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Record:
    name: str
    sequence: str


def load_plain(path: str | Path) -> list[Record]:
    """One text per file; line breaks and surrounding whitespace are dropped"""
    path = Path(path)
    raw = path.read_bytes().decode("latin-1")
    sequence = "".join(line.strip() for line in raw.splitlines())
    if not sequence:
        raise TextFormatError(f"{path} holds no text")
    return [Record(path.stem, sequence)]


def load_fasta(path: str | Path) -> list[Record]:
    """FASTA records; sequence lines are joined and upper-cased, headers give the names"""
    path = Path(path)
    records: list[Record] = []
    name, parts = None, []

    def flush():
        if name is None and not parts:
            return
        sequence = "".join(parts).upper()
        if not sequence:
            raise TextFormatError(f"record {name!r} in {path} has no sequence")
        records.append(Record(name or path.stem, sequence))

    with path.open(encoding="latin-1") as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith(";"):
                continue
            if line.startswith(">"):
                flush()
                fields = line[1:].split(maxsplit=1)
                name = fields[0] if fields else f"record{len(records) + 1}"
                parts = []
                continue
            parts.append("".join(line.split()))
    flush()
    if not records:
        raise TextFormatError(f"{path} holds no FASTA records")
    logger.info("Loaded %d FASTA record(s) from %s", len(records), path)
    return records


def load_records(path: str | Path, fmt: TextFormatChoices = TextFormatChoices.PLAIN) -> list[Record]:
    if fmt is TextFormatChoices.FASTA:
        return load_fasta(path)
    return load_plain(path)


def encode_records(
    records: list[Record],
    alphabet: Alphabet | None = None,
    concatenate: bool = False,
) -> list[tuple[str, EncodedText]]:
    """Encode every record over one shared alphabet (inferred from all of them unless given)"""
    if concatenate:
        records = [Record("+".join(r.name for r in records), "".join(r.sequence for r in records))]
    if alphabet is None:
        alphabet = Alphabet(tuple(sorted(set().union(*(r.sequence for r in records)))))
    return [(r.name, EncodedText.encode(r.sequence, alphabet)) for r in records]


def load_text(
    path: str | Path,
    fmt: TextFormatChoices = TextFormatChoices.PLAIN,
    alphabet: Alphabet | None = None,
    concatenate: bool = False,
) -> list[tuple[str, EncodedText]]:
    return encode_records(load_records(path, fmt), alphabet, concatenate)
