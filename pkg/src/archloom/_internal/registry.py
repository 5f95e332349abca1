"""Ordered registry of decode-failure strategies."""

from __future__ import annotations

from collections.abc import Callable
import logging
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from archloom._internal.mapper import MappingStrategy
    from archloom.model.exceptions import ArchloomError

logger = logging.getLogger(__name__)


class StrategyRegistry:
    """Strategies that turn a failure to read a stream into an archloom error.

    The first registered strategy that accepts the failure builds the error.
    A strategy that raises while building is skipped, and the fallback is
    used when none succeeds, so callers always get a coded ``ArchloomError``.
    """

    def __init__(self, fallback: Callable[[Exception, str | None], ArchloomError]) -> None:
        """Create a registry with no strategies.

        Args:
            fallback: Builds the error for failures no strategy recognises
        """
        self._strategies: list[MappingStrategy] = []
        self._fallback = fallback

    def register(self, strategy: MappingStrategy) -> None:
        """Append a strategy; earlier registrations take precedence."""
        self._strategies.append(strategy)

    def map(self, error: Exception, source_name: str | None = None) -> ArchloomError:
        """Build the archloom error for a decode failure.

        Args:
            error: What the decoder, validator or codec raised
            source_name: Name of the stream, prefixed to positions when given

        Returns:
            The error from the first strategy that handles ``error``, or the fallback's.
        """
        for strategy in self._strategies:
            if not strategy.can_handle(error):
                continue
            try:
                return strategy.map(error, source_name)
            except Exception:  # noqa: BLE001
                logger.debug("%s could not map %r", type(strategy).__name__, error, exc_info=True)

        logger.debug("no strategy for %s, using the fallback", type(error).__name__)
        return self._fallback(error, source_name)
