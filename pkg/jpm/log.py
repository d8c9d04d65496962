import logging

from rich.console import Console
from rich.logging import RichHandler

from jpm import settings

# stdout carries positions, decisions and CSV; everything human goes here
stderr_console = Console(stderr=True, highlight=False)


def setup_logging(level: str | int | None = None) -> None:
    level = level or settings.LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=stderr_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )
