import logging
from argparse import Namespace
from pathlib import Path

from rich.markup import escape

from jpm.log import stderr_console
from jpm.models import Alphabet, BackendChoices, IndexHeader, RecordHeader, TextFormatChoices
from jpm.utils.index_store import StoredIndex, build_index, save_index
from jpm.utils.text_loader import load_text

logger = logging.getLogger(__name__)


def build_stored_index(
    path: str | Path,
    fmt: TextFormatChoices,
    backend: BackendChoices,
    alphabet: Alphabet | None = None,
    concatenate: bool = False,
    eager: bool = False,
) -> StoredIndex:
    logger.info("Indexing %s as %s text with the %s back-end", path, fmt.value, backend.value)
    texts = load_text(path, fmt, alphabet, concatenate)
    alphabet = texts[0][1].alphabet
    indexes = [build_index(text, backend, eager) for _, text in texts]
    header = IndexHeader(
        backend=backend,
        alphabet=str(alphabet),
        records=[RecordHeader(name=name, n=text.n) for name, text in texts],
        eager=eager,
    )
    return StoredIndex(header, [name for name, _ in texts], indexes)


def index_command(args: Namespace) -> int:
    alphabet = Alphabet.parse(args.alphabet) if args.alphabet else None
    stored = build_stored_index(
        args.input,
        TextFormatChoices(args.format),
        BackendChoices(args.backend),
        alphabet,
        args.concatenate,
        args.eager,
    )
    output = args.output or f"{args.input}.jpmx"
    save_index(output, stored)
    sizes = ", ".join(f"{r.name} (n={r.n})" for r in stored.header.records)
    stderr_console.print(
        f"[bold]{stored.backend.value}[/bold] index over alphabet {escape(repr(stored.header.alphabet))}: {escape(sizes)} -> {escape(str(output))}"
    )
    return 0
