"""Format-neutral document blocks built by the reports and consumed by renderers."""

from dataclasses import dataclass
import re
from typing import Final

_PARAGRAPH_BREAK: Final[re.Pattern[str]] = re.compile(r"\n[ \t]*\n")


@dataclass(frozen=True, slots=True)
class Heading:
    text: str
    level: int = 2


@dataclass(frozen=True, slots=True)
class Paragraph:
    text: str


@dataclass(frozen=True, slots=True)
class Preformatted:
    """Text shown verbatim, such as a dialog form."""

    text: str


@dataclass(frozen=True, slots=True)
class Table:
    """A table whose cells hold free text; blank lines split a cell into paragraphs."""

    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]


Block = Heading | Paragraph | Preformatted | Table


@dataclass(frozen=True, slots=True)
class Document:
    blocks: tuple[Block, ...]
    title: str | None = None


def paragraphs(text: str) -> list[str]:
    """Split prose on blank lines and collapse whitespace inside each paragraph."""
    parts = (" ".join(chunk.split()) for chunk in _PARAGRAPH_BREAK.split(text))
    return [part for part in parts if part]
