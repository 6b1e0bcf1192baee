"""Command-line surface.

Subcommands: eval, curves, discard, reduce, minimal, intersect. Exit codes
encode the mathematical verdict only: discard exits 0 when the body is
discardable and 1 when it is retained, minimal exits 0/1 for minimal /
not minimal, and every usage, parse or validation problem exits 2.
Certificates are printed as stable ``key: value`` lines.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .envelope import DEFAULT_TOL
from .formats import DocumentError, emit_curves, parse_exhauster, serialize_exhauster
from .geometry import TAU, Exhauster, Point2, ValidationError, intersect_polygons
from .reduction import (
    DEFAULT_DELTA_MIN,
    DiscardCertificate,
    MinimalityReport,
    RetentionCertificate,
    check_minimal,
    evaluate_h,
    is_discardable,
    reduce as reduce_exhauster,
)
from .support import Arc


def _arc_bounds(arc: Arc) -> tuple[float, float]:
    """Start and display end of an arc (end rendered as start + length)."""
    return arc.start, arc.start + arc.length


def _format_discard(cert: DiscardCertificate, labels: Sequence[str]) -> list[str]:
    lines = [
        "verdict: discardable",
        f"body: {labels[cert.body]}",
        f"mode: {cert.mode}",
        f"intervals: {len(cert.partition)}",
    ]
    for k, part in enumerate(cert.partition):
        start, end = _arc_bounds(part.arc)
        lines.append(f"interval.{k}.start: {start!r}")
        lines.append(f"interval.{k}.end: {end!r}")
        lines.append(f"interval.{k}.witness: {labels[part.witness]}")
    return lines


def _format_retention(cert: RetentionCertificate, labels: Sequence[str]) -> list[str]:
    start, end = _arc_bounds(cert.contact)
    return [
        "verdict: retained",
        f"body: {labels[cert.body]}",
        f"contact.start: {start!r}",
        f"contact.end: {end!r}",
        f"contact.length: {cert.contact.length!r}",
        f"margin: {cert.margin!r}",
    ]


def _format_report(report: MinimalityReport, labels: Sequence[str]) -> list[str]:
    lines = [
        f"verdict: {'minimal' if report.minimal else 'not-minimal'}",
        f"bodies: {len(labels)}",
    ]
    for i, entry in enumerate(report.entries):
        name = labels[i]
        if isinstance(entry, DiscardCertificate):
            witnesses = ",".join(sorted({labels[w.witness] for w in entry.partition}))
            lines.append(f"body.{name}.status: removable")
            lines.append(f"body.{name}.mode: {entry.mode}")
            lines.append(f"body.{name}.witnesses: {witnesses}")
        else:
            start, end = _arc_bounds(entry)
            lines.append(f"body.{name}.status: kept")
            lines.append(f"body.{name}.contact.start: {start!r}")
            lines.append(f"body.{name}.contact.end: {end!r}")
            lines.append(f"body.{name}.contact.length: {entry.length!r}")
    if report.containment_violations:
        pairs = ",".join(
            f"{labels[inner]}<{labels[outer]}" for inner, outer in report.containment_violations
        )
        lines.append(f"containment.violations: {pairs}")
    else:
        lines.append("containment.violations: none")
    return lines


def _load(path: str) -> Exhauster:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err}") from err
    return parse_exhauster(text)


def _cmd_eval(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    value = evaluate_h(ex, Point2(args.dir[0], args.dir[1]))
    print(repr(value))
    return 0


def _cmd_curves(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    document = emit_curves(ex, args.samples, args.format)
    if args.out:
        Path(args.out).write_text(document, encoding="utf-8")
    else:
        sys.stdout.write(document)
    return 0


def _cmd_discard(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    if not 0 <= args.index < len(ex.bodies):
        raise DocumentError(f"body index {args.index} out of range for {len(ex.bodies)} bodies")
    result = is_discardable(ex, args.index, args.tol)
    if isinstance(result, DiscardCertificate):
        print("\n".join(_format_discard(result, ex.labels)))
        return 0
    print("\n".join(_format_retention(result, ex.labels)))
    return 1


def _cmd_reduce(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    reduced, log = reduce_exhauster(ex, args.tol, args.delta_min)
    for record in log:
        witnesses = ",".join(
            sorted({record.family[w.witness] for w in record.certificate.partition})
        )
        print(f"removed: {record.label} mode={record.certificate.mode} witnesses={witnesses}")
    print(f"kept: {','.join(reduced.labels)}")
    Path(args.out).write_text(serialize_exhauster(reduced), encoding="utf-8")
    print(f"wrote: {args.out}")
    return 0


def _cmd_minimal(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    report = check_minimal(ex, args.tol, args.delta_min)
    print("\n".join(_format_report(report, ex.labels)))
    return 0 if report.minimal else 1


def _cmd_intersect(args: argparse.Namespace) -> int:
    ex = _load(args.file)
    i, j = args.indices
    for index in (i, j):
        if not 0 <= index < len(ex.bodies):
            raise DocumentError(f"body index {index} out of range for {len(ex.bodies)} bodies")
    result = intersect_polygons(ex.bodies[i], ex.bodies[j])
    if result is None:
        print("empty")
        return 0
    print("kind: polygon")
    print(f"vertices: {len(result.vertices)}")
    for k, v in enumerate(result.vertices):
        print(f"vertex.{k}: {v.x!r} {v.y!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="equality tolerance on rho values (default 1e-9)")
    common.add_argument("--delta-min", type=float, default=DEFAULT_DELTA_MIN,
                        help="minimum contact-arc length in radians (default 1e-6)")

    parser = argparse.ArgumentParser(
        prog="exhausters",
        description="Support-curve calculus for reducing upper exhausters on the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate h at a direction")
    p.add_argument("file")
    p.add_argument("--dir", nargs=2, type=float, required=True, metavar=("X", "Y"))
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("curves", parents=[common], help="emit theta-rho curves")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=360)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_curves)

    p = sub.add_parser("discard", parents=[common], help="test whether one body is redundant")
    p.add_argument("file")
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(handler=_cmd_discard)

    p = sub.add_parser("reduce", parents=[common], help="remove redundant bodies")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("minimal", parents=[common], help="check inclusion-minimality")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_minimal)

    p = sub.add_parser("intersect", parents=[common], help="intersect two polygon bodies")
    p.add_argument("file")
    p.add_argument("--indices", nargs=2, type=int, required=True, metavar=("I", "J"))
    p.set_defaults(handler=_cmd_intersect)
    return parser


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.handler(args)
    except (DocumentError, ValidationError, ValueError, IndexError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())
