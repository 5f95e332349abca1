"""Command-line entry point: ``archloom <command> FILES... [options]``."""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
from dataclasses import dataclass
import json
import logging
from pathlib import Path
import sys
from typing import NoReturn

from archloom.docgen import OutputFormat, ReportKind, ReportSpec, emit_dsl, render
from archloom.dsl import ParseResult, parse
from archloom.model import ArchitectureModel, ArchloomError, Direction, export_canonical
from archloom.trace import TraceResult, coverage, diff, impact, trace
from archloom.validation import (
    ExitStatus,
    RuleConfig,
    default_config_path,
    exit_status,
    load_rule_config,
    validate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CLIError(Exception):
    """Typed CLI failure with an explicit process exit code."""

    message: str
    exit_code: int = ExitStatus.USAGE

    def __str__(self) -> str:
        return self.message


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 3 instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise CLIError(f"{self.prog}: error: {message}", ExitStatus.USAGE)


# ==================== Parser ====================


def build_parser() -> argparse.ArgumentParser:
    """Build the argparse command router for all subcommands."""
    parser = _ArgumentParser(
        prog="archloom",
        description=(
            "Five-layer architecture models: check, trace, document.\n\n"
            "Exit codes: 0 clean, 1 warnings (check) or non-canonical (fmt), "
            "2 errors, 3 usage or I/O failure."
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", default=False, help="Debug logging on stderr.")
    common = _ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, handler: Callable[[argparse.Namespace], int]) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    check_parser = command("check", "Parse and validate a model.", _cmd_check)
    check_parser.add_argument("files", nargs="+", metavar="FILE")
    check_parser.add_argument("--config", default=None, help="Rule config file (default: $ARCHLOOM_CONFIG).")
    check_parser.add_argument(
        "--deny",
        action="extend",
        nargs="+",
        default=[],
        metavar="CODE",
        help="Promote these codes to errors.",
    )

    trace_parser = command("trace", "Derivation closure of one element.", _cmd_trace)
    trace_parser.add_argument("files", nargs="+", metavar="FILE")
    trace_parser.add_argument("--id", required=True, dest="element_id")
    trace_parser.add_argument("--dir", choices=[d.value for d in Direction], default=Direction.DOWN.value)
    trace_parser.add_argument("--depth", type=_non_negative, default=None)
    trace_parser.add_argument("--include-flows", action="store_true", default=False)
    trace_parser.add_argument("--json", action="store_true", default=False)

    impact_parser = command("impact", "Elements to re-verify when some elements change.", _cmd_impact)
    impact_parser.add_argument("files", nargs="+", metavar="FILE")
    impact_parser.add_argument("--id", required=True, action="append", dest="ids")
    impact_parser.add_argument("--json", action="store_true", default=False)

    coverage_parser = command("coverage", "Per-layer orphans, gaps and complete chains.", _cmd_coverage)
    coverage_parser.add_argument("files", nargs="+", metavar="FILE")
    coverage_parser.add_argument("--json", action="store_true", default=False)

    diff_parser = command("diff", "Compare two versions of a model.", _cmd_diff)
    diff_parser.add_argument("old", nargs="+", metavar="OLD_FILE")
    diff_parser.add_argument("--against", nargs="+", required=True, metavar="NEW_FILE")
    diff_parser.add_argument("--json", action="store_true", default=False)

    docgen_parser = command("docgen", "Render a report.", _cmd_docgen)
    docgen_parser.add_argument("files", nargs="+", metavar="FILE")
    docgen_parser.add_argument("--kind", required=True, choices=[k.value for k in ReportKind])
    docgen_parser.add_argument("--subject", default=None)
    docgen_parser.add_argument("--format", required=True, choices=[f.value for f in OutputFormat])
    docgen_parser.add_argument("--out", default=None)

    export_parser = command("export", "Write the canonical JSON interchange.", _cmd_export)
    export_parser.add_argument("files", nargs="+", metavar="FILE")
    export_parser.add_argument("--out", required=True)

    fmt_parser = command("fmt", "Print or rewrite files in canonical form.", _cmd_fmt)
    fmt_parser.add_argument("files", nargs="+", metavar="FILE")
    fmt_parser.add_argument(
        "--write", action="store_true", default=False, help="Rewrite files in place (# comments are not kept)."
    )

    return parser


def _non_negative(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        msg = f"expected a non-negative integer, got {value!r}"
        raise argparse.ArgumentTypeError(msg) from None
    if number < 0:
        msg = f"expected a non-negative integer, got {value!r}"
        raise argparse.ArgumentTypeError(msg)
    return number


# ==================== Entrypoints ====================


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Parse argv, route to a command handler, and return the process exit code."""
    parser = build_parser()
    try:
        namespace = parser.parse_args(list(argv) if argv is not None else None)
    except CLIError as exc:
        print(exc, file=sys.stderr)
        return exc.exit_code
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else ExitStatus.CLEAN

    logging.basicConfig(
        level=logging.DEBUG if namespace.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("Running command %s", namespace.command)
    handler: Callable[[argparse.Namespace], int] = namespace.handler
    try:
        return int(handler(namespace))
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ArchloomError as exc:
        print(exc.to_diagnostic().render(), file=sys.stderr)
        return ExitStatus.ERRORS


def main(argv: Sequence[str] | None = None) -> int:
    """Console-script entry point."""
    return run_cli(argv)


# ==================== Helpers ====================


def _check_readable(files: Sequence[str]) -> None:
    for name in files:
        if not Path(name).is_file():
            msg = f"cannot read '{name}'"
            raise CLIError(msg, ExitStatus.USAGE)


def _parse(files: Sequence[str]) -> ParseResult:
    _check_readable(files)
    try:
        result = parse(files)
    except OSError as exc:
        msg = f"cannot read '{exc.filename}': {exc.strerror}"
        raise CLIError(msg, ExitStatus.USAGE) from exc
    for diagnostic in result.diagnostics:
        print(diagnostic.render(), file=sys.stderr)
    return result


def _load_model(files: Sequence[str]) -> ArchitectureModel:
    result = _parse(files)
    if result.model is None:
        msg = f"{len(result.diagnostics)} problem(s) while reading the model"
        raise CLIError(msg, ExitStatus.ERRORS)
    return result.model


def _rule_config(args: argparse.Namespace) -> RuleConfig:
    path = Path(args.config) if args.config else default_config_path()
    config = RuleConfig()
    if path is not None:
        try:
            config = load_rule_config(path)
        except OSError as exc:
            msg = f"cannot read config '{path}': {exc.strerror}"
            raise CLIError(msg, ExitStatus.USAGE) from exc
    config, notes = config.with_denied(args.deny)
    for note in notes:
        print(f"note: {note}", file=sys.stderr)
    return config


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8", newline="")
    except OSError as exc:
        msg = f"cannot write '{path}': {exc.strerror}"
        raise CLIError(msg, ExitStatus.USAGE) from exc


def _tree_lines(result: TraceResult) -> list[str]:
    """Indented BFS tree, children sorted by id."""
    depth = {node.id: node.depth for node in result.nodes}
    children: dict[str, list[tuple[str, str]]] = {}
    for node in result.nodes:
        if node.id == result.root:
            continue
        incoming = sorted(
            (edge.source, edge.kind.value)
            for edge in result.edges
            if edge.target == node.id and depth[edge.source] == node.depth - 1
        )
        if incoming:
            parent, kind = incoming[0]
            children.setdefault(parent, []).append((node.id, kind))

    lines: list[str] = []

    def walk(element_id: str, level: int) -> None:
        for child, kind in sorted(children.get(element_id, [])):
            lines.append(f"{'  ' * level}{child} ({kind})")
            walk(child, level + 1)

    walk(result.root, 0)
    return lines


# ==================== Command handlers ====================


def _cmd_check(args: argparse.Namespace) -> int:
    _check_readable(args.files)
    config = _rule_config(args)
    result = _parse(args.files)
    if result.model is None:
        return ExitStatus.ERRORS
    diagnostics = validate(result.model, config)
    for diagnostic in diagnostics:
        print(diagnostic.render(), file=sys.stderr)
    return exit_status(diagnostics, config)


def _cmd_trace(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    result = trace(
        model,
        args.element_id,
        Direction(args.dir),
        args.depth,
        include_flows=args.include_flows,
    )
    if args.json:
        print(result.to_json())
    else:
        for line in _tree_lines(result):
            print(line)
    if result.truncated:
        print(f"note: trace truncated at depth {args.depth}", file=sys.stderr)
    return ExitStatus.CLEAN


def _cmd_impact(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    affected = sorted(impact(model, args.ids))
    if args.json:
        print(json.dumps(affected))
    else:
        for element_id in affected:
            print(element_id)
    return ExitStatus.CLEAN


def _cmd_coverage(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    report = coverage(model)
    if args.json:
        print(report.to_json())
        return ExitStatus.CLEAN
    print(f"{'layer':<20}{'total':>7}{'orphans':>9}{'gaps':>6}")
    for entry in report.layers:
        print(f"{entry.layer.label:<20}{entry.total:>7}{entry.orphans:>9}{entry.gaps:>6}")
    print(f"chains complete: {report.chains_complete}/{report.chains_total}")
    return ExitStatus.CLEAN


def _cmd_diff(args: argparse.Namespace) -> int:
    _check_readable([*args.old, *args.against])
    old = _load_model(args.old)
    new = _load_model(args.against)
    result = diff(old, new)
    if args.json:
        print(result.to_json())
        return ExitStatus.CLEAN
    for label, ids in (
        ("added", result.added),
        ("removed", result.removed),
        ("modified", result.modified),
        ("impact", result.impact),
    ):
        for element_id in ids:
            print(f"{label:<9} {element_id}")
    return ExitStatus.CLEAN


def _cmd_docgen(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    spec = ReportSpec(kind=ReportKind(args.kind), subject=args.subject, format=OutputFormat(args.format))
    text = render(model, spec)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return ExitStatus.CLEAN


def _cmd_export(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    try:
        Path(args.out).write_bytes(export_canonical(model))
    except OSError as exc:
        msg = f"cannot write '{args.out}': {exc.strerror}"
        raise CLIError(msg, ExitStatus.USAGE) from exc
    return ExitStatus.CLEAN


def _cmd_fmt(args: argparse.Namespace) -> int:
    model = _load_model(args.files)
    status = ExitStatus.CLEAN
    for name in args.files:
        canonical = emit_dsl(model, file=name)
        current = Path(name).read_text(encoding="utf-8")
        if current == canonical:
            continue
        if args.write:
            dropped = comment_lines(current)
            if dropped:
                logger.warning(
                    "%s: rewrite drops %d comment line(s), first at line %d", name, len(dropped), dropped[0]
                )
            _write_text(name, canonical)
            print(f"reformatted {name}", file=sys.stderr)
        else:
            print(f"would reformat {name}", file=sys.stderr)
            sys.stdout.write(canonical)
            status = ExitStatus.WARNINGS
    return status
