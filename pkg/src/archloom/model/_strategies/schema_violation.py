"""Strategies for handling canonical documents that fail schema validation."""

from typing import cast

from pydantic import ValidationError
from typing_extensions import override

from archloom._internal.mapper import MappingStrategy
from archloom.model.exceptions import ArchloomError, CanonicalFormatError, UnknownKindError

_KIND_FIELDS = frozenset({"kind"})


def _dotted(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc) or "<document>"


class UnknownKindStrategy(MappingStrategy):
    """Map an unknown element or link kind name to UnknownKindError (E103).

    Only handles validation errors whose every problem is a bad ``kind``
    value, so that a document with other defects still reports E102.
    """

    @override
    def can_handle(self, error: Exception) -> bool:
        if not isinstance(error, ValidationError):
            return False
        errors = error.errors()
        return bool(errors) and all(
            err["type"] == "enum" and err["loc"] and err["loc"][-1] in _KIND_FIELDS
            for err in errors
        )

    @override
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        # Safe cast: can_handle() already verified it's a ValidationError
        first = cast("ValidationError", error).errors()[0]
        return UnknownKindError(str(first["input"]), _dotted(first["loc"]))


class SchemaViolationStrategy(MappingStrategy):
    """Map any other schema problem to CanonicalFormatError (E102) at its dotted path."""

    @override
    def can_handle(self, error: Exception) -> bool:
        return isinstance(error, ValidationError)

    @override
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        first = cast("ValidationError", error).errors()[0]
        position = _dotted(first["loc"])
        if source_name:
            position = f"{source_name}:{position}"
        return CanonicalFormatError(position, first["msg"])
