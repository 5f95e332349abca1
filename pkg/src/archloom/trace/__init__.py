"""Traceability closures, impact sets, coverage metrics and version diffs."""

from archloom.trace.coverage import coverage
from archloom.trace.diff import diff
from archloom.trace.engine import closure, derivation_view, impact, trace
from archloom.trace.results import (
    CoverageReport,
    LayerCoverage,
    ModelDiff,
    TraceEdge,
    TraceNode,
    TraceResult,
)

__all__ = [  # noqa: RUF022
    # Results
    "CoverageReport",
    "LayerCoverage",
    "ModelDiff",
    "TraceEdge",
    "TraceNode",
    "TraceResult",
    # Operations
    "closure",
    "coverage",
    "derivation_view",
    "diff",
    "impact",
    "trace",
]
