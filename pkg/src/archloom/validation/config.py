"""Rule severity configuration and its line-oriented config file."""

import logging
import os
from pathlib import Path
from typing import Final

from pydantic import BaseModel, ConfigDict, model_validator

from archloom.model.exceptions import RuleConfigError
from archloom.validation.catalog import KNOWN_CODES

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR: Final[str] = "ARCHLOOM_CONFIG"

_VERBS: Final[tuple[str, ...]] = ("promote", "demote", "suppress")
_PARTICIPLES: Final[dict[str, str]] = {"promote": "promoted", "demote": "demoted", "suppress": "suppressed"}
_THIRD_PERSON: Final[dict[str, str]] = {"promote": "promotes", "demote": "demotes", "suppress": "suppresses"}


class RuleConfig(BaseModel):
    """Severity overrides applied after validation.

    Attributes:
        promote: Codes forced to severity error.
        demote: Codes forced to severity info.
        suppress: Codes removed from the output.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    promote: frozenset[str] = frozenset()
    demote: frozenset[str] = frozenset()
    suppress: frozenset[str] = frozenset()

    @model_validator(mode="after")
    def _check_sets(self) -> "RuleConfig":
        for verb in _VERBS:
            for code in sorted(getattr(self, verb)):
                _check_entry(verb, code, self)
        return self

    def verb_of(self, code: str) -> str | None:
        """The verb configured for ``code``, if any."""
        for verb in _VERBS:
            if code in getattr(self, verb):
                return verb
        return None

    def with_denied(self, codes: list[str] | tuple[str, ...]) -> tuple["RuleConfig", list[str]]:
        """Merge ``--deny`` codes into ``promote``.

        A code the configuration already demotes or suppresses keeps its
        configured treatment and produces a note instead.

        Returns:
            The merged configuration and the notes to show the user.

        Raises:
            RuleConfigError: If a denied code is unknown.
        """
        notes: list[str] = []
        promote = set(self.promote)
        for code in codes:
            if code not in KNOWN_CODES:
                msg = f"unknown rule code '{code}' in --deny"
                raise RuleConfigError(msg)
            verb = self.verb_of(code)
            if verb in ("demote", "suppress"):
                notes.append(f"configuration {_THIRD_PERSON[verb]} {code}; --deny {code} ignored")
                continue
            promote.add(code)
        return self.model_copy(update={"promote": frozenset(promote)}), notes


def _check_entry(verb: str, code: str, config: RuleConfig, location: str | None = None) -> None:
    if code not in KNOWN_CODES:
        msg = f"unknown rule code '{code}'"
        raise RuleConfigError(msg, location)
    if verb != "promote" and code.startswith("E"):
        msg = f"error code {code} cannot be {_PARTICIPLES[verb]}"
        raise RuleConfigError(msg, location)
    others = [other for other in _VERBS if other != verb and code in getattr(config, other)]
    if others:
        msg = f"{code} is both {_PARTICIPLES[verb]} and {_PARTICIPLES[others[0]]}"
        raise RuleConfigError(msg, location)


def parse_rule_config(text: str, source: str = "<config>") -> RuleConfig:
    """Parse the config file format.

    One ``VERB CODE`` entry per line, where VERB is ``promote``, ``demote``
    or ``suppress``. Blank lines and ``#`` comments are ignored.

    Args:
        text: The file content.
        source: Name used in error locations.

    Returns:
        The parsed configuration.

    Raises:
        RuleConfigError: On an unknown verb or code, a malformed line, or
            conflicting entries (E104).
    """
    sets: dict[str, set[str]] = {verb: set() for verb in _VERBS}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        location = f"{source}:{number}"
        parts = line.split()
        if len(parts) != 2:
            msg = f"expected 'VERB CODE', got {line!r}"
            raise RuleConfigError(msg, location)
        verb, code = parts
        if verb not in sets:
            msg = f"unknown verb '{verb}' (expected promote, demote or suppress)"
            raise RuleConfigError(msg, location)
        partial = RuleConfig.model_construct(
            promote=frozenset(sets["promote"]),
            demote=frozenset(sets["demote"]),
            suppress=frozenset(sets["suppress"]),
        )
        _check_entry(verb, code, partial, location)
        sets[verb].add(code)
    config = RuleConfig(
        promote=frozenset(sets["promote"]),
        demote=frozenset(sets["demote"]),
        suppress=frozenset(sets["suppress"]),
    )
    logger.debug("Loaded rule configuration from %s: %s", source, config)
    return config


def load_rule_config(path: Path | str) -> RuleConfig:
    """Read and parse a config file.

    Raises:
        OSError: If the file cannot be read.
        RuleConfigError: If its content is invalid (E104).
    """
    file_path = Path(path)
    return parse_rule_config(file_path.read_text(encoding="utf-8"), str(path))


def default_config_path() -> Path | None:
    """Config path named by the ``ARCHLOOM_CONFIG`` environment variable, if set."""
    value = os.environ.get(CONFIG_ENV_VAR, "").strip()
    return Path(value) if value else None
