"""Strategies for JSON syntax, nesting depth and text decoding errors."""

import json
from typing import cast

from typing_extensions import override

from archloom._internal.mapper import MappingStrategy
from archloom.model.exceptions import ArchloomError, CanonicalFormatError


class JsonSyntaxStrategy(MappingStrategy):
    """Handle malformed JSON text (E102), reporting ``line:column``."""

    @override
    def can_handle(self, error: Exception) -> bool:
        return isinstance(error, json.JSONDecodeError)

    @override
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        # Safe cast: can_handle() already verified it's a JSONDecodeError
        decode_error = cast("json.JSONDecodeError", error)
        position = f"{decode_error.lineno}:{decode_error.colno}"
        if source_name:
            position = f"{source_name}:{position}"
        return CanonicalFormatError(position, decode_error.msg)


class TextEncodingStrategy(MappingStrategy):
    """Handle byte streams that are not UTF-8 (E102), reporting the byte offset."""

    @override
    def can_handle(self, error: Exception) -> bool:
        return isinstance(error, UnicodeDecodeError)

    @override
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        unicode_error = cast("UnicodeDecodeError", error)
        position = f"byte {unicode_error.start}"
        if source_name:
            position = f"{source_name}:{position}"
        return CanonicalFormatError(position, f"not UTF-8 ({unicode_error.reason})")


class NestingDepthStrategy(MappingStrategy):
    """Handle documents nested deeper than the JSON decoder can follow (E102)."""

    @override
    def can_handle(self, error: Exception) -> bool:
        return isinstance(error, RecursionError)

    @override
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        return CanonicalFormatError(source_name or "<stream>", "nesting too deep")
