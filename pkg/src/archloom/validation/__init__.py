"""Seamlessness rules over resolved models, with configurable severities."""

from archloom.validation.catalog import KNOWN_CODES, RULES, RULES_BY_CODE, rules_of
from archloom.validation.config import (
    CONFIG_ENV_VAR,
    RuleConfig,
    default_config_path,
    load_rule_config,
    parse_rule_config,
)
from archloom.validation.protocols import Rule, RuleCategory
from archloom.validation.validator import ExitStatus, apply_config, exit_status, validate

__all__ = [  # noqa: RUF022
    # Rules
    "KNOWN_CODES",
    "RULES",
    "RULES_BY_CODE",
    "Rule",
    "RuleCategory",
    "rules_of",
    # Configuration
    "CONFIG_ENV_VAR",
    "RuleConfig",
    "default_config_path",
    "load_rule_config",
    "parse_rule_config",
    # Validation
    "ExitStatus",
    "apply_config",
    "exit_status",
    "validate",
]
