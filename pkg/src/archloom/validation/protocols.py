"""Rule protocol definition."""

from abc import ABC, abstractmethod
from enum import StrEnum
from typing import ClassVar

from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import ArchElement
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import Layer


class RuleCategory(StrEnum):
    """What a rule hit means for the architecture.

    A gap is an element with nothing realizing it downstream (insufficient
    functionality); an orphan is an element deriving from nothing upstream
    (excessive functionality).
    """

    GAP = "gap"
    ORPHAN = "orphan"
    INFO = "info"
    ERROR = "error"


class Rule(ABC):
    """Abstract base class for one seamlessness rule.

    Subclasses declare their diagnostic code, category and the layer of the
    elements they flag, and implement ``check``. Rules are pure functions of
    the model: they never look at display names, and only the cross-service
    check reads service membership.
    """

    code: ClassVar[str]
    category: ClassVar[RuleCategory]
    layer: ClassVar[Layer]
    summary: ClassVar[str]

    @abstractmethod
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        """Evaluate the rule.

        Args:
            model: A model that passed ``build_model``.

        Returns:
            One diagnostic per offending element (or link), default severity.
        """

    def hit(self, element: ArchElement, message: str) -> Diagnostic:
        """Build a diagnostic for ``element`` with this rule's code."""
        return Diagnostic.of(self.code, message, element=element.id, span=element.src)
