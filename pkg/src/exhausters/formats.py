"""Exhauster documents and theta-rho curve emitters.

Documents are JSON with decimal coordinates so fixtures stay readable and
auditable:

    {
      "version": "1",
      "bodies": [
        {"type": "polygon", "vertices": [[0, 0], [1, 1], [-1, 1]], "label": "C0"},
        {"type": "point", "coordinates": [1, 2]},
        {"type": "segment", "endpoints": [[-2, 1], [-2, 2]]},
        {"type": "disc", "center": [0, 0], "radius": 1}
      ]
    }

Unknown fields are rejected, coordinates must be finite, and parsing
canonicalizes every record, so parse(serialize(ex)) round-trips exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from xml.sax.saxutils import escape, quoteattr

from .envelope import lower_envelope
from .geometry import TAU, ConvexBody, Exhauster, Point2, ValidationError, canonicalize_polygon
from .support import support_curve

FORMAT_VERSION = "1"

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


class DocumentError(ValueError):
    """The document text is malformed or violates the schema."""


def _require_keys(record: dict, where: str, required: set[str], optional: set[str]) -> None:
    keys = set(record)
    missing = required - keys
    if missing:
        raise DocumentError(f"{where}: missing field(s) {', '.join(sorted(missing))}")
    unknown = keys - required - optional
    if unknown:
        raise DocumentError(f"{where}: unknown field(s) {', '.join(sorted(unknown))}")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{where}: expected a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise DocumentError(f"{where}: coordinates must be finite")
    return v


def _pair(value, where: str) -> Point2:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{where}: expected a [x, y] pair")
    return Point2(_number(value[0], where), _number(value[1], where))


def _pair_list(value, where: str, minimum: int) -> list[Point2]:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list of [x, y] pairs")
    if len(value) < minimum:
        raise DocumentError(f"{where}: needs at least {minimum} point(s), got {len(value)}")
    return [_pair(p, f"{where}[{k}]") for k, p in enumerate(value)]


def _parse_body(record, where: str) -> ConvexBody:
    if not isinstance(record, dict):
        raise DocumentError(f"{where}: expected an object")
    kind = record.get("type")
    label = record.get("label", "")
    if not isinstance(label, str):
        raise DocumentError(f"{where}.label: expected a string")
    try:
        if kind == "polygon":
            _require_keys(record, where, {"type", "vertices"}, {"label"})
            return canonicalize_polygon(_pair_list(record["vertices"], f"{where}.vertices", 1), label)
        if kind == "segment":
            _require_keys(record, where, {"type", "endpoints"}, {"label"})
            pts = _pair_list(record["endpoints"], f"{where}.endpoints", 2)
            if len(pts) != 2:
                raise DocumentError(f"{where}.endpoints: expected exactly 2 points")
            return canonicalize_polygon(pts, label)
        if kind == "point":
            _require_keys(record, where, {"type", "coordinates"}, {"label"})
            return canonicalize_polygon([_pair(record["coordinates"], f"{where}.coordinates")], label)
        if kind == "disc":
            _require_keys(record, where, {"type", "center", "radius"}, {"label"})
            radius = _number(record["radius"], f"{where}.radius")
            if radius < 0:
                raise DocumentError(f"{where}.radius: must be non-negative")
            return ConvexBody.disc(_pair(record["center"], f"{where}.center"), radius, label)
    except ValidationError as err:
        raise DocumentError(f"{where}: {err}") from err
    raise DocumentError(f"{where}.type: expected polygon, segment, point or disc, got {kind!r}")


def parse_exhauster(text: str) -> Exhauster:
    """Parse a document into a canonical Exhauster."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"parse error at line {err.lineno}, column {err.colno}: {err.msg}") from err
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    _require_keys(doc, "document", {"version", "bodies"}, set())
    if doc["version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {doc['version']!r}")
    bodies = doc["bodies"]
    if not isinstance(bodies, list) or not bodies:
        raise DocumentError("bodies: expected a nonempty list")
    parsed = [_parse_body(rec, f"bodies[{i}]") for i, rec in enumerate(bodies)]
    try:
        return Exhauster(tuple(parsed))
    except ValidationError as err:
        raise DocumentError(str(err)) from err


def serialize_exhauster(ex: Exhauster) -> str:
    """Render an Exhauster as document text (the inverse of parse)."""
    records = []
    for body in ex.bodies:
        if body.kind == "disc":
            assert body.center is not None
            records.append(
                {
                    "type": "disc",
                    "center": [body.center.x, body.center.y],
                    "radius": body.radius,
                    "label": body.label,
                }
            )
        elif len(body.vertices) == 1:
            v = body.vertices[0]
            records.append({"type": "point", "coordinates": [v.x, v.y], "label": body.label})
        elif len(body.vertices) == 2:
            records.append(
                {
                    "type": "segment",
                    "endpoints": [[v.x, v.y] for v in body.vertices],
                    "label": body.label,
                }
            )
        else:
            records.append(
                {
                    "type": "polygon",
                    "vertices": [[v.x, v.y] for v in body.vertices],
                    "label": body.label,
                }
            )
    return json.dumps({"version": FORMAT_VERSION, "bodies": records}, indent=2) + "\n"


def _curve_table(ex: Exhauster, samples: int) -> tuple[list[float], list[list[float]], list[float]]:
    curves = [support_curve(b) for b in ex.bodies]
    env = lower_envelope(curves)
    thetas = [TAU * k / samples for k in range(samples)]
    series = [[c.value(t) for t in thetas] for c in curves]
    env_values = [env.value(t) for t in thetas]
    return thetas, series, env_values


def emit_curves(ex: Exhauster, samples: int, fmt: str) -> str:
    """Theta-rho curves of every body plus their lower envelope.

    ``fmt`` is "csv" (header ``theta,rho_<label>...,envelope``) or "svg"
    (one polyline per body, id equal to the body label, plus a heavier
    envelope polyline; theta spans [0, 2*pi], rho auto-scales with a 5%
    margin).
    """
    if samples < 16:
        raise ValidationError(f"need at least 16 samples, got {samples}")
    if fmt not in ("csv", "svg"):
        raise ValidationError(f"unknown format {fmt!r}, expected csv or svg")
    thetas, series, env_values = _curve_table(ex, samples)
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["theta"] + [f"rho_{b.label}" for b in ex.bodies] + ["envelope"])
        for k, t in enumerate(thetas):
            writer.writerow([t] + [series[j][k] for j in range(len(series))] + [env_values[k]])
        return out.getvalue()
    return _svg_document(ex, thetas, series, env_values)


def _svg_document(
    ex: Exhauster, thetas: list[float], series: list[list[float]], env_values: list[float]
) -> str:
    width, height = 720, 480
    left, right, top, bottom = 64, 16, 16, 48
    plot_w, plot_h = width - left - right, height - top - bottom

    lo = min(min(s) for s in series + [env_values])
    hi = max(max(s) for s in series + [env_values])
    span = hi - lo
    if span <= 0:
        span = 1.0
    lo -= 0.05 * span
    hi += 0.05 * span

    def x_of(t: float) -> float:
        return left + t / TAU * plot_w

    def y_of(r: float) -> float:
        return top + (hi - r) / (hi - lo) * plot_h

    def polyline(values: list[float], ident: str, stroke: str, extra: str = "") -> str:
        pts = " ".join(f"{x_of(t):.2f},{y_of(v):.2f}" for t, v in zip(thetas, values))
        return (
            f'  <polyline id={quoteattr(ident)} fill="none" stroke="{stroke}" '
            f'stroke-width="1.5"{extra} points="{pts}"/>'
        )

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"  <title>{escape('support curves of ' + ', '.join(ex.labels))}</title>",
        f'  <rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="#cccccc"/>',
    ]
    theta_ticks = [(0.0, "0"), (TAU / 4, "pi/2"), (TAU / 2, "pi"), (3 * TAU / 4, "3pi/2"), (TAU, "2pi")]
    for t, name in theta_ticks:
        x = x_of(t)
        lines.append(f'  <line x1="{x:.2f}" y1="{top + plot_h}" x2="{x:.2f}" '
                     f'y2="{top + plot_h + 5}" stroke="#444444"/>')
        lines.append(f'  <text x="{x:.2f}" y="{top + plot_h + 18}" font-size="11" '
                     f'font-family="sans-serif" text-anchor="middle">{name}</text>')
    for k in range(5):
        r = lo + (hi - lo) * k / 4
        y = y_of(r)
        lines.append(f'  <line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" '
                     f'stroke="#444444"/>')
        lines.append(f'  <text x="{left - 8}" y="{y + 4:.2f}" font-size="11" '
                     f'font-family="sans-serif" text-anchor="end">{r:.3g}</text>')
    lines.append(f'  <text x="{left + plot_w / 2:.2f}" y="{height - 10}" font-size="12" '
                 f'font-family="sans-serif" text-anchor="middle">theta (radians)</text>')
    lines.append(f'  <text x="14" y="{top + 12}" font-size="12" '
                 f'font-family="sans-serif">rho</text>')
    for j, body in enumerate(ex.bodies):
        lines.append(polyline(series[j], body.label, _PALETTE[j % len(_PALETTE)]))
    lines.append(
        polyline(env_values, "envelope", "#000000", extra=' stroke-dasharray="7 4"').replace(
            'stroke-width="1.5"', 'stroke-width="2.5"'
        )
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
