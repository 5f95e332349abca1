"""Shared fixtures: the vehicle-registration worked example and its golden documents."""

from pathlib import Path
from typing import Final

from hypothesis import HealthCheck, settings
import pytest

from archloom.dsl import ParseResult, parse
from archloom.model import ArchitectureModel

# Property suites run 1000 cases each from a fixed seed.
settings.register_profile(
    "archloom",
    max_examples=1000,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("archloom")

FIXTURES_DIR: Final[Path] = Path(__file__).parent / "fixtures"
VEHREG_DIR: Final[Path] = FIXTURES_DIR / "vehreg"
GOLDEN_DIR: Final[Path] = FIXTURES_DIR / "golden"

VEHREG_FILES: Final[tuple[Path, ...]] = tuple(
    VEHREG_DIR / name for name in ("business.arch", "functional.arch", "components.arch", "data.arch")
)


@pytest.fixture(scope="session")
def vehreg_result() -> ParseResult:
    """Parse result of the four vehreg fixture files."""
    return parse(VEHREG_FILES)


@pytest.fixture(scope="session")
def vehreg(vehreg_result: ParseResult) -> ArchitectureModel:
    """The resolved vehreg model."""
    assert vehreg_result.model is not None, vehreg_result.diagnostics
    return vehreg_result.model
