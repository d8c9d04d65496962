"""Index artifacts.

Layout: MAGIC, a little-endian uint32 format version, a uint32 byte length,
the JSON IndexHeader, then the arrays of every record written one after the
other with ``np.save``. The text itself is only stored by the interval
back-end, which sweeps it for occurrence queries.
"""
import json
import logging
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

import numpy as np
from pydantic import ValidationError

from jpm.errors import IndexFormatError
from jpm.interval import IntervalIndex
from jpm.jumping import build_jump_index
from jpm.models import FORMAT_VERSION, BackendChoices, EncodedText, IndexHeader, RecordHeader
from jpm.prefix_index import InvertedPrefixTable
from jpm.wavelet import WaveletTree

logger = logging.getLogger(__name__)

MAGIC = b"JPMX"
_PREAMBLE = struct.Struct("<II")

AnyIndex = InvertedPrefixTable | WaveletTree | IntervalIndex


@dataclass
class StoredIndex:
    header: IndexHeader
    names: list[str]
    indexes: list[AnyIndex]

    @property
    def backend(self) -> BackendChoices:
        return self.header.backend

    def __iter__(self):
        return iter(zip(self.names, self.indexes))


def build_index(text: EncodedText, backend: BackendChoices, eager: bool = False) -> AnyIndex:
    if backend.jumps:
        return build_jump_index(text, backend)
    return IntervalIndex.build_eager(text) if eager else IntervalIndex.build_lazy(text)


def _arrays(index: AnyIndex) -> list[np.ndarray]:
    if isinstance(index, InvertedPrefixTable):
        return [np.asarray(index.totals, dtype=np.int64), index.block_array()]
    if isinstance(index, WaveletTree):
        return index.bit_arrays()
    return [index.text_codes(), index.pmin, index.pmax, index.filled]


def save_index(path: str | Path, stored: StoredIndex) -> None:
    payload = stored.header.json().encode()
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(_PREAMBLE.pack(stored.header.version, len(payload)))
        f.write(payload)
        for index in stored.indexes:
            for array in _arrays(index):
                np.save(f, array, allow_pickle=False)
    logger.info("Saved %s index with %d record(s) to %s", stored.backend.value, len(stored.indexes), path)


def _read_array(f: BinaryIO) -> np.ndarray:
    try:
        return np.load(f, allow_pickle=False)
    except (ValueError, EOFError) as e:
        raise IndexFormatError(f"truncated or corrupt index payload: {e}") from e


def _read_record(f: BinaryIO, header: IndexHeader, record: RecordHeader) -> AnyIndex:
    alphabet = header.get_alphabet()
    if header.backend is BackendChoices.TABLE:
        totals, block = _read_array(f), _read_array(f)
        try:
            return InvertedPrefixTable(alphabet, record.n, totals.tolist(), block.tolist())
        except ValueError as e:
            raise IndexFormatError(str(e)) from e
    if header.backend is BackendChoices.WAVELET:
        bit_arrays = [_read_array(f) for _ in range(alphabet.sigma - 1)]
        try:
            return WaveletTree.restore(alphabet, record.n, bit_arrays)
        except ValueError as e:
            raise IndexFormatError(str(e)) from e
    codes, pmin, pmax, filled = (_read_array(f) for _ in range(4))
    try:
        return IntervalIndex.restore(EncodedText(alphabet, codes), pmin, pmax, filled)
    except ValueError as e:
        raise IndexFormatError(str(e)) from e


def load_index(path: str | Path) -> StoredIndex:
    with open(path, "rb") as f:
        if f.read(len(MAGIC)) != MAGIC:
            raise IndexFormatError(f"{path} is not a jpm index")
        preamble = f.read(_PREAMBLE.size)
        if len(preamble) != _PREAMBLE.size:
            raise IndexFormatError(f"{path} is truncated")
        version, length = _PREAMBLE.unpack(preamble)
        if version != FORMAT_VERSION:
            raise IndexFormatError(f"{path} has format version {version}, this build reads version {FORMAT_VERSION}")
        try:
            header = IndexHeader.parse_obj(json.loads(f.read(length)))
        except (ValueError, ValidationError) as e:
            raise IndexFormatError(f"bad index header in {path}: {e}") from e
        indexes = [_read_record(f, header, record) for record in header.records]
    logger.info("Loaded %s index with %d record(s) from %s", header.backend.value, len(indexes), path)
    return StoredIndex(header, [r.name for r in header.records], indexes)
