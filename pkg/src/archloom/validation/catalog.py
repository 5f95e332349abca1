"""The ordered rule catalog: single source of truth for known validation codes."""

from collections.abc import Mapping
from types import MappingProxyType
from typing import Final

from archloom.validation._rules import (
    CrossServiceCoverage,
    EmptyClass,
    EmptyDialog,
    ImplicitCoverage,
    ManualOperation,
    OrphanMethod,
    OrphanModule,
    ServiceWithoutDialogs,
    ServiceWithoutOperation,
    UncoveredAutomatedFunction,
    UnrealizedModule,
    UnrealizedViewFunction,
)
from archloom.validation.protocols import Rule, RuleCategory

RULES: Final[tuple[Rule, ...]] = (
    UncoveredAutomatedFunction(),
    UnrealizedViewFunction(),
    UnrealizedModule(),
    OrphanModule(),
    OrphanMethod(),
    EmptyDialog(),
    ServiceWithoutDialogs(),
    ServiceWithoutOperation(),
    EmptyClass(),
    ManualOperation(),
    ImplicitCoverage(),
    CrossServiceCoverage(),
)

RULES_BY_CODE: Final[Mapping[str, Rule]] = MappingProxyType({rule.code: rule for rule in RULES})

KNOWN_CODES: Final[frozenset[str]] = frozenset(RULES_BY_CODE)


def rules_of(category: RuleCategory) -> tuple[Rule, ...]:
    """Catalog rules of one category, in catalog order."""
    return tuple(rule for rule in RULES if rule.category is category)
