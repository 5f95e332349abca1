"""The ``.arch`` architecture language: tokenizer, parser and multi-file front end."""

from archloom.dsl.frontend import ParseResult, SourceText, locate, parse, parse_text
from archloom.dsl.lexer import Token, TokenKind, comment_lines, tokenize

__all__ = [
    "ParseResult",
    "SourceText",
    "Token",
    "TokenKind",
    "comment_lines",
    "locate",
    "parse",
    "parse_text",
    "tokenize",
]
