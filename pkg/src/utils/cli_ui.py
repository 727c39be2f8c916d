# src/utils/cli_ui.py
from __future__ import annotations

import logging
import os
from typing import Any, Iterable, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from src.core.config import settings


def _mode() -> str:
    """
    TEMPO_MODE:
      - unset / normal : colored output
      - plain          : no colors or markup (pipes, CI logs)
    """
    raw = (os.getenv("TEMPO_MODE") or "").strip().lower()
    if raw in {"plain", "0", "no", "off"}:
        return "plain"
    return "normal"


console = Console(no_color=_mode() == "plain", highlight=False)
err_console = Console(stderr=True, no_color=_mode() == "plain", highlight=False)


def configure_logging(level: Optional[str] = None) -> None:
    """Route every module logger through rich on stderr."""
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


def banner(title: str) -> None:
    if _mode() == "plain":
        console.print(title)
        return
    console.rule(f"[bold]{title}")


def print_verdict(question: str, answer: bool, note: str = "") -> None:
    """One-line decision, e.g. ``eulerian: yes``."""
    word = "yes" if answer else "no"
    style = "green" if answer else "red"
    suffix = f" ({escape(note)})" if note else ""
    console.print(f"{question}: [{style}]{word}[/{style}]{suffix}")


def print_error(message: str, code: str = "") -> None:
    prefix = escape(f"[{code}] ") if code else ""
    err_console.print(f"[bold red]error:[/bold red] {prefix}{escape(message)}")


def print_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    table = Table(title=title, show_lines=False)
    for col in columns:
        table.add_column(col, justify="right" if col not in {"name", "problem", "decision"} else "left")
    for row in rows:
        table.add_row(*(escape(str(cell)) for cell in row))
    console.print(table)
