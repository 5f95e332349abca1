"""Built-in seamlessness rules."""

from archloom.validation._rules.containment import EmptyClass, EmptyDialog, ServiceWithoutDialogs
from archloom.validation._rules.realization import (
    OrphanMethod,
    OrphanModule,
    UnrealizedModule,
    UnrealizedViewFunction,
)
from archloom.validation._rules.service import (
    CrossServiceCoverage,
    ImplicitCoverage,
    ManualOperation,
    ServiceWithoutOperation,
    UncoveredAutomatedFunction,
    service_of,
)

__all__ = [
    "CrossServiceCoverage",
    "EmptyClass",
    "EmptyDialog",
    "ImplicitCoverage",
    "ManualOperation",
    "OrphanMethod",
    "OrphanModule",
    "ServiceWithoutDialogs",
    "ServiceWithoutOperation",
    "UncoveredAutomatedFunction",
    "UnrealizedModule",
    "UnrealizedViewFunction",
    "service_of",
]
