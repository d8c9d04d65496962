import struct

import numpy as np
import pytest

from jpm.core import encode
from jpm.errors import IndexFormatError
from jpm.interval import IntervalIndex
from jpm.models import Alphabet, BackendChoices, IndexHeader, ParikhVector, RecordHeader
from jpm.prefix_index import InvertedPrefixTable
from jpm.utils.index_store import MAGIC, StoredIndex, build_index, load_index, save_index
from jpm.wavelet import WaveletTree
from tests.conftest import BINARY_TEXT, EXAMPLE_TEXT, WAVELET_TEXT


def stored_for(raw: str, backend: BackendChoices, eager: bool = False) -> StoredIndex:
    text = encode(raw)
    header = IndexHeader(
        backend=backend,
        alphabet=str(text.alphabet),
        records=[RecordHeader(name="sample", n=text.n)],
        eager=eager,
    )
    return StoredIndex(header, ["sample"], [build_index(text, backend, eager)])


def test_table_round_trip(tmp_path):
    path = tmp_path / "example.jpmx"
    save_index(path, stored_for(EXAMPLE_TEXT, BackendChoices.TABLE))
    loaded = load_index(path)
    assert loaded.backend is BackendChoices.TABLE
    table = loaded.indexes[0]
    assert isinstance(table, InvertedPrefixTable)
    assert table.row(2) == [0, 3, 10, 13]
    assert table.to_text().decode() == EXAMPLE_TEXT


def test_wavelet_round_trip(tmp_path):
    path = tmp_path / "wavelet.jpmx"
    save_index(path, stored_for(WAVELET_TEXT, BackendChoices.WAVELET))
    tree = load_index(path).indexes[0]
    assert isinstance(tree, WaveletTree)
    assert tree.firstfit([2, 3, 2, 1]) == 11
    assert tree.to_text().decode() == WAVELET_TEXT


@pytest.mark.parametrize("eager", [False, True])
def test_interval_round_trip(tmp_path, eager):
    stored = stored_for(BINARY_TEXT, BackendChoices.INTERVAL, eager)
    stored.indexes[0].decide(ParikhVector.of([3, 2]))
    path = tmp_path / "binary.jpmx"
    save_index(path, stored)
    loaded = load_index(path)
    index = loaded.indexes[0]
    assert isinstance(index, IntervalIndex)
    assert index.same_table(stored.indexes[0])
    assert index.occurrences(ParikhVector.of([3, 2])) == stored.indexes[0].occurrences(ParikhVector.of([3, 2]))
    assert loaded.header.eager is eager


def test_multi_record_round_trip(tmp_path):
    alphabet = Alphabet.parse("ACGT")
    texts = [encode("ACGTTG", alphabet), encode("GGAC", alphabet)]
    header = IndexHeader(
        backend=BackendChoices.TABLE,
        alphabet="ACGT",
        records=[RecordHeader(name="r1", n=6), RecordHeader(name="r2", n=4)],
    )
    stored = StoredIndex(header, ["r1", "r2"], [build_index(t, BackendChoices.TABLE) for t in texts])
    path = tmp_path / "multi.jpmx"
    save_index(path, stored)
    loaded = load_index(path)
    assert [name for name, _ in loaded] == ["r1", "r2"]
    assert loaded.indexes[1].to_text().decode() == "GGAC"


def test_bad_magic(tmp_path):
    path = tmp_path / "bad.jpmx"
    path.write_bytes(b"NOPE" + bytes(16))
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_wrong_version(tmp_path):
    path = tmp_path / "old.jpmx"
    path.write_bytes(MAGIC + struct.pack("<II", 99, 2) + b"{}")
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_truncated_payload(tmp_path):
    path = tmp_path / "example.jpmx"
    save_index(path, stored_for(EXAMPLE_TEXT, BackendChoices.TABLE))
    data = path.read_bytes()
    path.write_bytes(data[: len(data) - 40])
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_header_mismatch(tmp_path):
    stored = stored_for(EXAMPLE_TEXT, BackendChoices.TABLE)
    stored.header.records[0].n = 17
    path = tmp_path / "lying.jpmx"
    save_index(path, stored)
    with pytest.raises(IndexFormatError):
        load_index(path)


def test_block_array_is_saved_compactly(tmp_path):
    stored = stored_for(EXAMPLE_TEXT, BackendChoices.TABLE)
    block = stored.indexes[0].block_array()
    assert isinstance(block, np.ndarray)
    assert block.size == len(EXAMPLE_TEXT) + 3
