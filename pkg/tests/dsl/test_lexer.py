"""Tests for the tokenizer and string literal handling."""

from archloom.dsl import SourceText, TokenKind, comment_lines, parse, parse_text, tokenize
from archloom.dsl.lexer import normalize_block_text


def _kinds(text: str) -> list[TokenKind]:
    tokens, _ = tokenize(text, "t.arch")
    return [token.kind for token in tokens]


class TestTokens:
    """Token shapes and positions."""

    def test_punctuation_and_identifiers(self) -> None:
        """Dotted identifiers are single tokens; ``->`` is one token."""
        assert _kinds("viewfn VF01.2 flows -> D1 { } ( , )") == [
            TokenKind.IDENT,
            TokenKind.IDENT,
            TokenKind.IDENT,
            TokenKind.ARROW,
            TokenKind.IDENT,
            TokenKind.LBRACE,
            TokenKind.RBRACE,
            TokenKind.LPAREN,
            TokenKind.COMMA,
            TokenKind.RPAREN,
            TokenKind.EOF,
        ]

    def test_spans_are_one_based(self) -> None:
        """Line and column count from 1; the EOF token sits at the end."""
        tokens, diagnostics = tokenize('a\n  "bc"', "t.arch")
        assert diagnostics == []
        assert [(t.span.line, t.span.column, t.span.length) for t in tokens] == [
            (1, 1, 1),
            (2, 3, 4),
            (2, 7, 0),
        ]

    def test_bad_character_is_p001_and_skipped(self) -> None:
        """An unexpected character is reported and scanning continues."""
        tokens, diagnostics = tokenize("a @ b", "t.arch")
        assert [t.value for t in tokens if t.kind is TokenKind.IDENT] == ["a", "b"]
        assert [(d.code, d.span.column if d.span else None) for d in diagnostics] == [("P001", 3)]


class TestStrings:
    """Single-line and triple-quoted literals."""

    def test_valid_escapes(self) -> None:
        """Only ``\\"`` and ``\\\\`` are escapes."""
        tokens, diagnostics = tokenize(r'"say \"hi\" \\ ok"', "t.arch")
        assert diagnostics == []
        assert tokens[0].value == 'say "hi" \\ ok'

    def test_other_escape_is_p001(self) -> None:
        """``\\n`` inside a literal is rejected."""
        _, diagnostics = tokenize(r'"a\nb"', "t.arch")
        assert [d.code for d in diagnostics] == ["P001"]
        assert "escape" in diagnostics[0].message

    def test_unterminated_string_skips_the_line(self) -> None:
        """Scanning resumes on the next line."""
        tokens, diagnostics = tokenize('"open\nnext', "t.arch")
        assert [d.code for d in diagnostics] == ["P001"]
        assert [t.value for t in tokens if t.kind is TokenKind.IDENT] == ["next"]

    def test_unterminated_triple_string_ends_the_file(self) -> None:
        """An open block string swallows the rest of the text."""
        tokens, diagnostics = tokenize('a """ b c', "t.arch")
        assert [d.message for d in diagnostics] == ["unterminated triple-quoted string"]
        assert [t.kind for t in tokens] == [TokenKind.IDENT, TokenKind.EOF]

    def test_triple_quoted_block_is_dedented(self) -> None:
        """Leading newline, trailing blank line and common indentation are removed."""
        tokens, _ = tokenize('"""\n    first\n      second\n\n    third\n  """', "t.arch")
        assert tokens[0].value == "first\n  second\n\nthird"

    def test_triple_quoted_may_hold_quotes(self) -> None:
        """Single and escaped quotes survive inside a block."""
        tokens, _ = tokenize('"""a "b" \\"""c"""', "t.arch")
        assert tokens[0].value == 'a "b" """c'

    def test_normalize_keeps_inline_text(self) -> None:
        """Text on the opening line is kept as is."""
        assert normalize_block_text("inline") == "inline"
        assert normalize_block_text("\n  x\n  ") == "x"


class TestDecoding:
    """Byte sources."""

    def test_bom_is_ignored(self) -> None:
        """A UTF-8 byte order mark does not reach the tokenizer."""
        result = parse([SourceText("b.arch", b'\xef\xbb\xbfcomponent C "c" kind subsystem {\n}\n')])
        assert result.ok
        assert result.diagnostics == ()

    def test_invalid_utf8_is_p001_at_its_position(self) -> None:
        """The first undecodable byte is reported with its line and column."""
        result = parse([SourceText("b.arch", b"# ok\nab\xffc")])
        assert not result.ok
        (diagnostic,) = result.diagnostics
        assert diagnostic.code == "P001"
        assert diagnostic.span is not None
        assert (diagnostic.span.line, diagnostic.span.column) == (2, 3)

    def test_text_names_are_unicode(self) -> None:
        """Display names may hold any UTF-8 text."""
        result = parse_text('component C "Хранилище данных" kind subsystem {\n}\n')
        assert result.model is not None
        assert result.model.element("C").name == "Хранилище данных"


class TestComments:
    """Locating ``#`` comments in source text."""

    def test_comment_lines(self) -> None:
        """Whole-line and trailing comments are found by line."""
        text = '# header\ncomponent C "c" kind subsystem {  # trailing\n}\n'
        assert comment_lines(text) == [1, 2]

    def test_hash_inside_strings_is_not_a_comment(self) -> None:
        """Single and triple-quoted strings hide ``#``."""
        text = 'class K "# one" in C {\n  method M {\n    desc """\n      # two\n    """\n  }\n}\n'
        assert comment_lines(text) == []

    def test_no_comments(self) -> None:
        """Plain text has none."""
        assert comment_lines("") == []
