"""
TSV rendering with a provenance header.

Every file the CLI writes starts with exactly one ``#`` line produced by
RunConfig.provenance(); the remaining lines are tab-separated.
"""
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO

logger = logging.getLogger(__name__)

UNDEFINED = "NA"


def format_value(value) -> str:
    """Render one TSV cell; undefined metrics become ``NA``."""
    if value is None:
        return UNDEFINED
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def render_tsv(
    header: str,
    columns: Optional[list[str]],
    rows: Iterable[Iterable],
) -> str:
    lines = [header]
    if columns:
        lines.append("\t".join(columns))
    for row in rows:
        lines.append("\t".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def write_text(text: str, path: Optional[Path], stream: Optional[TextIO] = None):
    """Write `text` to `path`, or to `stream` (stdout) when no path is given."""
    if path is None:
        (stream or sys.stdout).write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    logger.info("Wrote %s (%d bytes)", path, len(text.encode("utf-8")))


def strip_provenance(text: str) -> list[str]:
    """Lines of a written TSV without the ``#`` header and blank lines."""
    return [
        line for line in text.splitlines()
        if line and not line.startswith("#")
    ]
