"""Interfaces for turning decode failures into coded archloom errors."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from archloom.model.exceptions import ArchloomError


class MappingStrategy(ABC):
    """Recognises one family of decode failures and builds its error.

    Canonical import registers one strategy per family: bad UTF-8, JSON
    syntax, nesting depth, unknown kind names and other schema violations.
    """

    @abstractmethod
    def can_handle(self, error: Exception) -> bool:
        """Whether ``error`` belongs to this strategy's family."""

    @abstractmethod
    def map(self, error: Exception, source_name: str | None) -> ArchloomError:
        """Build the coded error for ``error``.

        Args:
            error: A failure accepted by ``can_handle``
            source_name: Name of the stream, prefixed to the reported position when given

        Returns:
            The archloom error carrying the position and detail of the failure.
        """


class ExceptionMapper(ABC):
    """Entry point a decoder uses to report its failures.

    Each format owns a mapper with its own strategies; callers re-raise the
    result ``from`` the original failure.
    """

    @abstractmethod
    def map(self, error: Exception, source_name: str | None = None) -> ArchloomError:
        """Return the archloom error for a failure raised while decoding ``source_name``."""
