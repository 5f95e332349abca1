"""Tokenizer for ``.arch`` source text."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import StrEnum
import re
import textwrap
from typing import Final

from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import SourceSpan


class TokenKind(StrEnum):
    IDENT = "identifier"
    STRING = "string"
    LBRACE = "'{'"
    RBRACE = "'}'"
    LPAREN = "'('"
    RPAREN = "')'"
    COMMA = "','"
    ARROW = "'->'"
    EOF = "end of file"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    value: str
    span: SourceSpan

    def describe(self) -> str:
        if self.kind is TokenKind.IDENT:
            return f"'{self.value}'"
        if self.kind is TokenKind.STRING:
            return "string"
        return self.kind.value


_PUNCTUATION: Final[dict[str, TokenKind]] = {
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
    "->": TokenKind.ARROW,
}

_MASTER: Final[re.Pattern[str]] = re.compile(
    r"""
    (?P<space>[ \t\r\f\v\n]+)
    | (?P<comment>\#[^\n]*)
    | (?P<triple>""")
    | (?P<quote>")
    | (?P<ident>[A-Za-z][A-Za-z0-9_.]*)
    | (?P<punct>->|[{}(),])
    """,
    re.VERBOSE,
)
_TRIPLE_BODY: Final[re.Pattern[str]] = re.compile(r'((?:[^"\\]|\\.|"(?!""))*)"""', re.DOTALL)
_STRING_BODY: Final[re.Pattern[str]] = re.compile(r'((?:[^"\\\n]|\\.)*)"')
_ESCAPE: Final[re.Pattern[str]] = re.compile(r"\\(.)", re.DOTALL)
_VALID_ESCAPES: Final[frozenset[str]] = frozenset({'"', "\\"})


class _LineIndex:
    """Offset to (line, column) conversion for one text."""

    def __init__(self, text: str) -> None:
        self._text = text
        self._starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def span(self, file: str, offset: int, length: int) -> SourceSpan:
        line = bisect_right(self._starts, offset)
        start = self._starts[line - 1]
        line_end = self._text.find("\n", offset)
        if line_end == -1:
            line_end = len(self._text)
        # Token spans never cross lines.
        length = max(0, min(length, line_end - offset))
        return SourceSpan(file=file, line=line, column=offset - start + 1, length=length)


def _unescape(body: str) -> str | None:
    """Resolve ``\\"`` and ``\\\\``; None if any other escape is present."""
    if any(m.group(1) not in _VALID_ESCAPES for m in _ESCAPE.finditer(body)):
        return None
    return _ESCAPE.sub(lambda m: m.group(1), body)


def normalize_block_text(raw: str) -> str:
    """Docstring-like cleanup of triple-quoted text.

    A newline right after the opening quotes and a whitespace-only last line
    are dropped, then the common indentation is removed.
    """
    if raw.startswith("\n"):
        raw = raw[1:]
    head, sep, last = raw.rpartition("\n")
    if sep and not last.strip():
        raw = head
    return textwrap.dedent(raw)


def tokenize(text: str, file: str) -> tuple[list[Token], list[Diagnostic]]:
    """Split source text into tokens.

    Lexical problems (P001) never stop the scan: a bad character is skipped,
    an unterminated single-line string skips to the end of its line, and an
    unterminated triple-quoted string ends the file.

    Args:
        text: The decoded source text.
        file: File name used in spans.

    Returns:
        The tokens, always ending with an EOF token, and the P001 diagnostics.
    """
    index = _LineIndex(text)
    tokens: list[Token] = []
    diagnostics: list[Diagnostic] = []
    position = 0
    size = len(text)

    def lexical_error(message: str, offset: int, length: int) -> None:
        diagnostics.append(Diagnostic.of("P001", message, span=index.span(file, offset, length)))

    while position < size:
        match = _MASTER.match(text, position)
        if match is None:
            lexical_error(f"unexpected character {text[position]!r}", position, 1)
            position += 1
            continue
        group = match.lastgroup
        start = position
        position = match.end()
        if group in ("space", "comment"):
            continue
        if group == "ident":
            tokens.append(Token(TokenKind.IDENT, match.group(), index.span(file, start, position - start)))
        elif group == "punct":
            value = match.group()
            tokens.append(Token(_PUNCTUATION[value], value, index.span(file, start, len(value))))
        elif group == "triple":
            body = _TRIPLE_BODY.match(text, position)
            if body is None:
                lexical_error("unterminated triple-quoted string", start, 3)
                position = size
                continue
            position = body.end()
            value = _unescape(body.group(1))
            if value is None:
                lexical_error("invalid escape in string (only \\\" and \\\\ are allowed)", start, 3)
                continue
            tokens.append(
                Token(TokenKind.STRING, normalize_block_text(value), index.span(file, start, position - start))
            )
        else:
            body = _STRING_BODY.match(text, position)
            if body is None:
                lexical_error("unterminated string", start, 1)
                newline = text.find("\n", position)
                position = size if newline == -1 else newline
                continue
            position = body.end()
            value = _unescape(body.group(1))
            if value is None:
                lexical_error("invalid escape in string (only \\\" and \\\\ are allowed)", start, position - start)
                continue
            tokens.append(Token(TokenKind.STRING, value, index.span(file, start, position - start)))

    tokens.append(Token(TokenKind.EOF, "", index.span(file, size, 0)))
    return tokens, diagnostics


def comment_lines(text: str) -> list[int]:
    """1-based line numbers holding a ``#`` comment; ``#`` inside strings does not count."""
    index = _LineIndex(text)
    lines: list[int] = []
    position = 0
    while position < len(text):
        match = _MASTER.match(text, position)
        if match is None:
            position += 1
            continue
        position = match.end()
        if match.lastgroup == "comment":
            lines.append(index.span("", match.start(), 0).line)
        elif match.lastgroup == "triple":
            body = _TRIPLE_BODY.match(text, position)
            position = body.end() if body is not None else len(text)
        elif match.lastgroup == "quote":
            body = _STRING_BODY.match(text, position)
            newline = text.find("\n", position)
            position = body.end() if body is not None else (len(text) if newline == -1 else newline)
    return lines
