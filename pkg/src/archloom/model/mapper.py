"""Exception mapper for the canonical interchange format."""

from typing_extensions import override

from archloom._internal.mapper import ExceptionMapper
from archloom._internal.registry import StrategyRegistry
from archloom.model._strategies.json_syntax import (
    JsonSyntaxStrategy,
    NestingDepthStrategy,
    TextEncodingStrategy,
)
from archloom.model._strategies.schema_violation import (
    SchemaViolationStrategy,
    UnknownKindStrategy,
)
from archloom.model.exceptions import ArchloomError, CanonicalFormatError


def _generic_format_error(error: Exception, source_name: str | None) -> ArchloomError:
    return CanonicalFormatError(source_name or "<stream>", str(error))


class CanonicalExceptionMapper(ExceptionMapper):
    """Maps decoding exceptions raised while importing a canonical stream.

    Uses a registry of strategies; the unknown-kind strategy is registered
    before the generic schema strategy so that E103 wins over E102.
    """

    def __init__(self) -> None:
        self._registry = StrategyRegistry(fallback=_generic_format_error)
        self._register_strategies()

    def _register_strategies(self) -> None:
        """Register all canonical-stream mapping strategies.

        Strategies are tried in registration order.
        """
        self._registry.register(TextEncodingStrategy())
        self._registry.register(JsonSyntaxStrategy())
        self._registry.register(NestingDepthStrategy())
        self._registry.register(UnknownKindStrategy())
        self._registry.register(SchemaViolationStrategy())

    @override
    def map(self, error: Exception, source_name: str | None = None) -> ArchloomError:
        """Map a decoding exception to an archloom exception.

        Args:
            error: The decoding exception
            source_name: Optional stream name

        Returns:
            The mapped archloom exception
        """
        return self._registry.map(error, source_name)
