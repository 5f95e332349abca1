"""Run the rule catalog and classify the outcome."""

from collections.abc import Iterable
from enum import IntEnum
import logging

from archloom.model.diagnostics import Diagnostic, Severity
from archloom.model.graph import ArchitectureModel
from archloom.validation.catalog import RULES
from archloom.validation.config import RuleConfig

logger = logging.getLogger(__name__)


class ExitStatus(IntEnum):
    """Process exit codes shared by every command."""

    CLEAN = 0
    WARNINGS = 1
    ERRORS = 2
    USAGE = 3


def apply_config(diagnostics: Iterable[Diagnostic], config: RuleConfig | None = None) -> list[Diagnostic]:
    """Apply promote/demote/suppress, keeping the input order."""
    if config is None:
        return list(diagnostics)
    applied: list[Diagnostic] = []
    for diagnostic in diagnostics:
        if diagnostic.code in config.suppress:
            continue
        if diagnostic.code in config.promote:
            diagnostic = diagnostic.with_severity(Severity.ERROR)  # noqa: PLW2901
        elif diagnostic.code in config.demote:
            diagnostic = diagnostic.with_severity(Severity.INFO)  # noqa: PLW2901
        applied.append(diagnostic)
    return applied


def validate(model: ArchitectureModel, config: RuleConfig | None = None) -> list[Diagnostic]:
    """Evaluate every catalog rule against a model.

    Args:
        model: A model that passed ``build_model``.
        config: Optional severity overrides.

    Returns:
        The diagnostics after overrides, sorted by severity, code and element id.
    """
    found: list[Diagnostic] = []
    for rule in RULES:
        hits = rule.check(model)
        if hits:
            logger.debug("Rule %s flagged %d element(s)", rule.code, len(hits))
        found.extend(hits)
    return sorted(apply_config(found, config), key=Diagnostic.sort_key)


def exit_status(diagnostics: Iterable[Diagnostic], config: RuleConfig | None = None) -> ExitStatus:
    """Classify diagnostics: 0 clean, 1 warnings only, 2 any error.

    Overrides are applied first, so re-applying the config used by
    ``validate`` changes nothing.
    """
    severities = {d.severity for d in apply_config(diagnostics, config)}
    if Severity.ERROR in severities:
        return ExitStatus.ERRORS
    if Severity.WARNING in severities:
        return ExitStatus.WARNINGS
    return ExitStatus.CLEAN
