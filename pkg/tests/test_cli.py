import pytest

from jpm.cli.app import EXIT_IO, EXIT_NOT_FOUND, EXIT_OK, EXIT_USAGE, main
from jpm.cli.views.index import build_stored_index
from jpm.cli.views.query import answer_query
from jpm.models import BackendChoices, ParikhVector, QueryModeChoices, TextFormatChoices
from jpm.utils.index_store import load_index, save_index
from tests.conftest import BINARY_TEXT, EXAMPLE_TEXT


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(EXAMPLE_TEXT + "\n")
    return path


def build(path, *extra) -> str:
    output = f"{path}.jpmx"
    assert main(["index", "--input", str(path), *extra]) == EXIT_OK
    return output


@pytest.mark.parametrize("backend", ["table", "wavelet"])
def test_occurrence_query(example_file, capsys, backend):
    index = build(example_file, "--backend", backend)
    capsys.readouterr()
    assert main(["query", "--index", index, "--query", "a=3 b=1 c=2"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == "5\n6\n7\n13\n"
    assert "4 occurrence(s)" in captured.err
    assert "J=6" in captured.err


def test_positional_query_with_trace(example_file, capsys):
    index = build(example_file)
    capsys.readouterr()
    assert main(["query", "--input", index, "--query", "3 1 2", "--trace"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.split() == ["5", "6", "7", "13"]
    assert "logical trace" in captured.err


def test_decision_exit_codes(example_file, capsys):
    index = build(example_file)
    capsys.readouterr()
    assert main(["query", "--index", index, "--query", "a=3 b=1 c=2", "--mode", "decision"]) == EXIT_OK
    assert capsys.readouterr().out == "yes\n"
    assert main(["query", "--index", index, "--query", "b=3", "--mode", "decision"]) == EXIT_NOT_FOUND
    assert capsys.readouterr().out == "no\n"


def test_interval_back_end(tmp_path, capsys):
    path = tmp_path / "binary.txt"
    path.write_text(BINARY_TEXT)
    index = build(path, "--backend", "interval", "--eager")
    assert main(["query", "--index", index, "--query", "a=10 b=10", "--mode", "decision"]) == EXIT_OK
    assert main(["query", "--index", index, "--query", "a=3"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "14"


def test_usage_errors(example_file, capsys):
    index = build(example_file)
    assert main(["query", "--index", index, "--query", "a=0"]) == EXIT_USAGE
    assert main(["query", "--index", index, "--query", "1 2"]) == EXIT_USAGE
    assert main(["query", "--index", index, "--query", "z=1"]) == EXIT_USAGE
    assert main(["index", "--input", str(example_file), "--backend", "interval"]) == EXIT_USAGE
    assert "binary alphabet" in capsys.readouterr().err


def test_non_ascii_bytes_are_symbols(tmp_path, capsys):
    path = tmp_path / "latin.txt"
    path.write_bytes(b"ab\xe9ab\xe9")
    index = build(path)
    capsys.readouterr()
    assert main(["query", "--index", index, "--query", "1 1 1"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["1", "2", "3", "4"]


def test_io_errors(tmp_path):
    assert main(["index", "--input", str(tmp_path / "missing.txt")]) == EXIT_IO
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["index", "--input", str(empty)]) == EXIT_IO
    junk = tmp_path / "junk.jpmx"
    junk.write_bytes(b"not an index")
    assert main(["query", "--index", str(junk), "--query", "a=1"]) == EXIT_IO


def test_bad_arguments_exit_with_usage():
    with pytest.raises(SystemExit) as excinfo:
        main(["query", "--query", "a=1"])
    assert excinfo.value.code == EXIT_USAGE


def test_bench_csv_is_deterministic(capsys):
    argv = ["bench", "--n", "2000", "--sigma", "4", "--m-values", "8", "32", "--reps", "2"]
    argv += ["--queries-per-text", "3", "--seed", "5", "--no-timing", "--backend", "table", "--backend", "wavelet"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first
    lines = first.splitlines()
    assert lines[0].startswith("schema_version,")
    assert "median_jump_ns" not in lines[0]
    assert len(lines) == 1 + 2 * 2


def test_bench_on_fixed_text(tmp_path, capsys):
    path = tmp_path / "dna.fa"
    path.write_text(">r1\nACGTTGCAAC\n>r2\nGGTACCATGA\n" * 20)
    output = tmp_path / "bench.csv"
    argv = ["bench", "--text", str(path), "--format", "fasta", "--m-values", "8", "--reps", "2"]
    argv += ["--queries-per-text", "2", "--seed", "1", "--no-timing", "--output", str(output), "--baseline"]
    assert main(argv) == EXIT_OK
    rows = output.read_text().splitlines()
    assert len(rows) == 2
    assert rows[1].split(",")[1] == "400"


def test_saved_index_answers_like_the_built_one(example_file, tmp_path):
    q = ParikhVector.of([3, 1, 2])
    for backend in (BackendChoices.TABLE, BackendChoices.WAVELET):
        stored = build_stored_index(example_file, TextFormatChoices.PLAIN, backend)
        path = tmp_path / f"{backend.value}.jpmx"
        save_index(path, stored)
        for mode in QueryModeChoices:
            fresh = answer_query(stored, q, mode)
            loaded = answer_query(load_index(path), q, mode)
            assert fresh.lines == loaded.lines
            assert fresh.found and loaded.found


def test_multi_record_fasta(tmp_path, capsys):
    path = tmp_path / "reads.fa"
    path.write_text(">r1\nAACG\n>r2\nGGCA\n")
    index = build(path, "--format", "fasta", "--alphabet", "ACGT")
    capsys.readouterr()
    assert main(["query", "--index", index, "--query", "A=1 C=1"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["r1\t2", "r2\t3"]
