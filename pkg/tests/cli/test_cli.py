"""Tests for the archloom command line."""

import json
import logging
from pathlib import Path

import pytest

from archloom.cli import main, run_cli
from archloom.model import ArchitectureModel, import_canonical
from archloom.validation import CONFIG_ENV_VAR
from tests.conftest import GOLDEN_DIR, VEHREG_FILES

FILES = [str(path) for path in VEHREG_FILES]

STANDALONE = 'component C "c" kind subsystem {\n}\n'


@pytest.fixture
def _no_config_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


pytestmark = pytest.mark.usefixtures("_no_config_from_environment")


def _write(path: Path, text: str) -> str:
    path.write_text(text, encoding="utf-8")
    return str(path)


# ==================== Routing and usage ====================


class TestUsage:
    """Argument handling and exit code 3."""

    def test_help_exits_cleanly(self, capsys: pytest.CaptureFixture[str]) -> None:
        """``--help`` prints usage and exits 0."""
        assert run_cli(["--help"]) == 0
        assert "Exit codes" in capsys.readouterr().out

    def test_unknown_command(self, capsys: pytest.CaptureFixture[str]) -> None:
        """An unknown subcommand is a usage error."""
        assert run_cli(["frobnicate", *FILES]) == 3
        assert "usage:" in capsys.readouterr().err

    def test_missing_required_option(self) -> None:
        """``trace`` without ``--id`` is a usage error."""
        assert run_cli(["trace", *FILES]) == 3

    def test_negative_depth(self) -> None:
        """``--depth`` must be a non-negative integer."""
        assert run_cli(["trace", *FILES, "--id", "VF05", "--depth", "-1"]) == 3

    def test_unreadable_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A missing input exits 3 and names the path."""
        missing = str(tmp_path / "nonexistent.arch")
        assert run_cli(["check", missing]) == 3
        assert missing in capsys.readouterr().err

    def test_main_is_run_cli(self) -> None:
        """The console script routes through the same entry point."""
        assert main(["check", *FILES]) == 0


# ==================== check ====================


class TestCheck:
    """Parse, validate and classify."""

    def test_fixture_is_clean(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Only informational findings, reported on stderr."""
        assert run_cli(["check", *FILES]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "INFO I201" in captured.err
        assert "INFO I202" in captured.err

    def test_deny_promotes_to_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Denying an informational code fails the run."""
        assert run_cli(["check", *FILES, "--deny", "I201"]) == 2
        assert "ERROR I201" in capsys.readouterr().err

    def test_deny_unknown_code(self, capsys: pytest.CaptureFixture[str]) -> None:
        """An unknown denied code is E104."""
        assert run_cli(["check", *FILES, "--deny", "W999"]) == 2
        assert "E104" in capsys.readouterr().err

    def test_config_from_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """ARCHLOOM_CONFIG suppresses codes, and wins over ``--deny`` with a note."""
        monkeypatch.setenv(CONFIG_ENV_VAR, _write(tmp_path / "ci.conf", "suppress I201\nsuppress I202\n"))
        assert run_cli(["check", *FILES, "--deny", "I201"]) == 0
        err = capsys.readouterr().err
        assert "I202" not in err
        assert "note: configuration suppresses I201; --deny I201 ignored" in err

    def test_config_option(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """``--config`` names the file explicitly."""
        config = _write(tmp_path / "ci.conf", "promote I202\n")
        assert run_cli(["check", *FILES, "--config", config]) == 2
        assert "ERROR I202" in capsys.readouterr().err

    def test_invalid_config(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """A broken config file is E104, exit 2."""
        config = _write(tmp_path / "bad.conf", "escalate W102\n")
        assert run_cli(["check", *FILES, "--config", config]) == 2
        assert "E104" in capsys.readouterr().err

    def test_missing_config_file(self, tmp_path: Path) -> None:
        """An unreadable config is an I/O failure."""
        assert run_cli(["check", *FILES, "--config", str(tmp_path / "absent.conf")]) == 3

    def test_parse_error(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Syntax errors are reported and exit 2."""
        broken = _write(tmp_path / "broken.arch", "process\n")
        assert run_cli(["check", broken]) == 2
        assert "P002" in capsys.readouterr().err

    def test_warnings_exit_one(self, tmp_path: Path) -> None:
        """An empty class gives W109 and exit 1."""
        model = _write(tmp_path / "m.arch", STANDALONE + '\nclass K "k" in C {\n}\n')
        assert run_cli(["check", model]) == 1


# ==================== trace, impact, coverage, diff ====================


class TestQueries:
    """Read-only query commands."""

    def test_trace_tree(self, capsys: pytest.CaptureFixture[str]) -> None:
        """One line per module below VF05 at depth 1; the truncation note goes to stderr."""
        assert run_cli(["trace", *FILES, "--id", "VF05", "--dir", "down", "--depth", "1"]) == 0
        captured = capsys.readouterr()
        assert captured.out.splitlines() == [
            "GetProcessStatus (Realizes)",
            "SaveProcessStatus (Realizes)",
            "SelectProcessType (Realizes)",
        ]
        assert "truncated" in captured.err

    def test_trace_tree_is_indented(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Deeper levels are indented by two spaces per hop."""
        assert run_cli(["trace", *FILES, "--id", "SaveProcessStatus"]) == 0
        assert capsys.readouterr().out.splitlines() == ["StoreProcessStatus (Realizes)"]
        assert run_cli(["trace", *FILES, "--id", "StoreProcessStatus", "--dir", "up", "--depth", "2"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "PROCESS_STATUS (Contains)" in lines
        assert "  VF05 (Realizes)" in lines

    def test_trace_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """``--json`` prints the TraceResult document."""
        assert run_cli(["trace", *FILES, "--id", "OPTC01.03", "--depth", "1", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert [node["id"] for node in payload["nodes"]] == ["OPTC01.03", "SRTS01.03"]
        assert payload["truncated"] is True

    def test_trace_unknown_id(self, capsys: pytest.CaptureFixture[str]) -> None:
        """An unknown root is E101, exit 2."""
        assert run_cli(["trace", *FILES, "--id", "VF99"]) == 2
        assert "E101" in capsys.readouterr().err

    def test_impact(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Sorted ids, one per line, or a JSON array."""
        assert run_cli(["impact", *FILES, "--id", "VF10"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == sorted(lines)
        assert {"VF10", "ExitPreparation", "CloseSession"} <= set(lines)
        assert run_cli(["impact", *FILES, "--id", "VF10", "--id", "PROCESS", "--json"]) == 0
        affected = json.loads(capsys.readouterr().out)
        assert {"VF10", "PROCESS", "GetProcessStatus"} <= set(affected)

    def test_coverage(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A table per layer and the chain count."""
        assert run_cli(["coverage", *FILES]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split() == ["layer", "total", "orphans", "gaps"]
        assert lines[3].split() == ["Functional", "11", "0", "0"]
        assert lines[-1] == "chains complete: 1/1"

    def test_coverage_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """``--json`` prints the CoverageReport."""
        assert run_cli(["coverage", *FILES, "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["chains_total"] == 1

    def test_diff(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Adding a class to a copy shows up as added, with its component modified."""
        copies = [_write(tmp_path / path.name, path.read_text(encoding="utf-8")) for path in VEHREG_FILES]
        with Path(copies[-1]).open("a", encoding="utf-8") as handle:
            handle.write('\nclass ARCHIVE "ARCHIVE" in DS {\n}\n')
        assert run_cli(["diff", *FILES, "--against", *copies, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["added"] == ["ARCHIVE"]
        assert payload["modified"] == ["DS"]
        assert "ARCHIVE" in payload["impact"]

    def test_diff_identical(self, capsys: pytest.CaptureFixture[str]) -> None:
        """No output for identical versions."""
        assert run_cli(["diff", *FILES, "--against", *FILES]) == 0
        assert capsys.readouterr().out == ""


# ==================== docgen, export, fmt ====================


class TestOutputs:
    """Commands that produce documents and files."""

    def test_docgen_matches_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The VF05 module table is byte-identical to the golden file."""
        argv = ["docgen", *FILES, "--kind", "viewfn-modules", "--subject", "VF05", "--format", "markdown"]
        assert run_cli(argv) == 0
        assert capsys.readouterr().out == (GOLDEN_DIR / "vf05_modules.md").read_text(encoding="utf-8")

    def test_docgen_to_file(self, tmp_path: Path) -> None:
        """``--out`` writes the document instead of printing it."""
        out = tmp_path / "matrix.csv"
        argv = ["docgen", *FILES, "--kind", "trace-matrix", "--format", "csv", "--out", str(out)]
        assert run_cli(argv) == 0
        assert out.read_text(encoding="utf-8").startswith("operation,service,dialog,viewfn,module,method\n")

    def test_docgen_csv_needs_matrix(self, capsys: pytest.CaptureFixture[str]) -> None:
        """CSV for a dialog report is E106, exit 2."""
        argv = ["docgen", *FILES, "--kind", "dialog-report", "--subject", "D01.03.03", "--format", "csv"]
        assert run_cli(argv) == 2
        assert "E106" in capsys.readouterr().err

    def test_docgen_wrong_subject(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A view function is not a dialog: E105."""
        argv = ["docgen", *FILES, "--kind", "dialog-report", "--subject", "VF05", "--format", "html"]
        assert run_cli(argv) == 2
        assert "E105" in capsys.readouterr().err

    def test_export_round_trips(self, tmp_path: Path, vehreg: ArchitectureModel) -> None:
        """The exported document imports back to the same model."""
        out = tmp_path / "model.json"
        assert run_cli(["export", *FILES, "--out", str(out)]) == 0
        assert import_canonical(out.read_bytes()) == vehreg

    def test_fmt_fixture_is_canonical(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Canonical files exit 0 and print nothing."""
        assert run_cli(["fmt", *FILES]) == 0
        assert capsys.readouterr().out == ""

    def test_fmt_check_and_write(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Non-canonical input exits 1; ``--write`` fixes it in place."""
        path = tmp_path / "c.arch"
        name = _write(path, 'component   C "c"   kind subsystem {\n\n}\n')
        assert run_cli(["fmt", name]) == 1
        captured = capsys.readouterr()
        assert captured.out == STANDALONE
        assert f"would reformat {name}" in captured.err

        assert run_cli(["fmt", name, "--write"]) == 0
        assert path.read_text(encoding="utf-8") == STANDALONE
        assert run_cli(["fmt", name]) == 0

    def test_fmt_write_reports_dropped_comments(
        self, tmp_path: Path, caplog: pytest.LogCaptureFixture
    ) -> None:
        """Rewriting a commented file warns that the comments are gone."""
        path = tmp_path / "c.arch"
        name = _write(path, '# storage\ncomponent C "c # not a comment" kind subsystem {\n  # empty\n}\n')
        with caplog.at_level(logging.WARNING, logger="archloom.cli"):
            assert run_cli(["fmt", name, "--write"]) == 0
        assert "#" not in path.read_text(encoding="utf-8").replace('"c # not a comment"', "")
        warnings = [r.getMessage() for r in caplog.records if r.levelno == logging.WARNING]
        assert warnings == [f"{name}: rewrite drops 2 comment line(s), first at line 1"]

    def test_fmt_write_without_comments_is_quiet(
        self, tmp_path: Path, caplog: pytest.LogCaptureFixture
    ) -> None:
        """A ``#`` inside a string is not a comment."""
        name = _write(tmp_path / "c.arch", 'component   C "c # 1" kind subsystem {\n}\n')
        with caplog.at_level(logging.WARNING, logger="archloom.cli"):
            assert run_cli(["fmt", name, "--write"]) == 0
        assert not [r for r in caplog.records if r.levelno == logging.WARNING]
