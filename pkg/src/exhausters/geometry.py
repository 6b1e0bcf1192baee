"""Planar convex bodies and their support geometry.

Bodies are immutable. Polygons are stored as canonical counter-clockwise
vertex rings (convex hull of the input points, duplicates and collinear
points removed, ring started at the lexicographically smallest vertex);
discs are stored as an exact center plus radius. Singletons and segments
are first-class 1- and 2-vertex polygons, so every nonempty compact convex
set used here has one canonical representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

TAU = 2.0 * math.pi

# Cross products below this fraction of the operand scale are treated as
# collinear during canonicalization.
COLLINEAR_EPS = 1e-12
# Containment is decided on support values, see `contains`.
CONTAINMENT_TOL = 1e-9


class ValidationError(ValueError):
    """A value violates a construction precondition."""


class UnsupportedKindError(ValidationError):
    """An operation was given a body kind it does not handle."""


def norm_angle(theta: float) -> float:
    """Map an angle to the canonical interval [0, 2*pi)."""
    t = math.fmod(theta, TAU)
    if t < 0.0:
        t += TAU
    if t >= TAU:  # adding TAU to a tiny negative can round to TAU exactly
        t = 0.0
    return t


@dataclass(frozen=True)
class Point2:
    """A point of the plane with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValidationError(f"coordinates must be finite, got ({self.x}, {self.y})")

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y


@dataclass(frozen=True)
class Direction:
    """A unit direction of the plane, identified by its angle in [0, 2*pi)."""

    theta: float

    def __post_init__(self) -> None:
        t = float(self.theta)
        if not math.isfinite(t):
            raise ValidationError("direction angle must be finite")
        object.__setattr__(self, "theta", norm_angle(t))

    @classmethod
    def from_vector(cls, x: float, y: float) -> "Direction":
        if x == 0.0 and y == 0.0:
            raise ValidationError("cannot take the direction of the zero vector")
        return cls(math.atan2(y, x))

    @property
    def unit(self) -> tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))


def _cross(o: tuple[float, float], a: tuple[float, float], b: tuple[float, float]) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _collinear_scale(o: tuple[float, float], a: tuple[float, float], b: tuple[float, float]) -> float:
    return max(1.0, math.dist(o, a) * math.dist(a, b))


def _convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Strict convex hull in CCW order, starting at the lexicographic minimum.

    Collinear interior points are dropped; an all-collinear input yields the
    two extreme points, a single repeated point yields itself.
    """
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts

    def build(seq: list[tuple[float, float]]) -> list[tuple[float, float]]:
        chain: list[tuple[float, float]] = []
        for p in seq:
            while len(chain) >= 2:
                turn = _cross(chain[-2], chain[-1], p)
                if turn <= COLLINEAR_EPS * _collinear_scale(chain[-2], chain[-1], p):
                    chain.pop()
                else:
                    break
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # fully collinear input collapses to the two extremes
        return [pts[0], pts[-1]] if pts[0] != pts[-1] else [pts[0]]
    return hull


@dataclass(frozen=True)
class ConvexBody:
    """A nonempty compact convex set: a canonical polygon or a disc.

    Construct through :meth:`polygon` / :meth:`disc` (or
    :func:`canonicalize_polygon`); the constructor itself only validates, so
    non-canonical polygons are rejected rather than silently repaired.
    """

    kind: str  # "polygon" | "disc"
    vertices: tuple[Point2, ...] = ()
    center: Point2 | None = None
    radius: float = 0.0
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.kind == "polygon":
            self._validate_polygon()
        elif self.kind == "disc":
            self._validate_disc()
        else:
            raise ValidationError(f"unknown body kind {self.kind!r}")

    def _validate_polygon(self) -> None:
        if self.center is not None:
            raise ValidationError("polygon bodies carry no center")
        k = len(self.vertices)
        if k == 0:
            raise ValidationError("polygon needs at least one vertex")
        ring = [(p.x, p.y) for p in self.vertices]
        if len(set(ring)) != k:
            raise ValidationError("polygon vertices must be pairwise distinct")
        if k < 3:
            return
        for i in range(k):
            o, a, b = ring[i - 1], ring[i], ring[(i + 1) % k]
            if _cross(o, a, b) <= COLLINEAR_EPS * _collinear_scale(o, a, b):
                raise ValidationError(
                    "polygon vertices must be in strictly convex counter-clockwise position"
                )

    def _validate_disc(self) -> None:
        if self.vertices:
            raise ValidationError("disc bodies carry no vertex list")
        if self.center is None:
            raise ValidationError("disc needs a center")
        r = float(self.radius)
        if not math.isfinite(r) or r < 0.0:
            raise ValidationError(f"disc radius must be finite and non-negative, got {r}")
        object.__setattr__(self, "radius", r)

    @staticmethod
    def polygon(points: list[Point2] | tuple[Point2, ...], label: str = "") -> "ConvexBody":
        return canonicalize_polygon(list(points), label=label)

    @staticmethod
    def disc(center: Point2, radius: float, label: str = "") -> "ConvexBody":
        return ConvexBody(kind="disc", center=center, radius=radius, label=label)

    @property
    def is_polygon(self) -> bool:
        return self.kind == "polygon"

    def with_label(self, label: str) -> "ConvexBody":
        return replace(self, label=label)


def canonicalize_polygon(points: list[Point2], label: str = "") -> ConvexBody:
    """Convex hull of the given points as a canonical CCW polygon body.

    Duplicate and collinear points are removed; a single point yields a
    1-vertex polygon, collinear inputs a 2-vertex segment.
    """
    if not points:
        raise ValidationError("cannot build a polygon from an empty point list")
    hull = _convex_hull([(p.x, p.y) for p in points])
    return ConvexBody(kind="polygon", vertices=tuple(Point2(x, y) for x, y in hull), label=label)


@dataclass(frozen=True)
class Exhauster:
    """An ordered, label-addressable family of convex bodies."""

    bodies: tuple[ConvexBody, ...]

    def __post_init__(self) -> None:
        bodies = tuple(self.bodies)
        if not bodies:
            raise ValidationError("an exhauster needs at least one body")
        labeled = tuple(
            b if b.label else b.with_label(f"C{i}") for i, b in enumerate(bodies)
        )
        labels = [b.label for b in labeled]
        if len(set(labels)) != len(labels):
            dup = sorted({l for l in labels if labels.count(l) > 1})
            raise ValidationError(f"duplicate body labels: {', '.join(dup)}")
        object.__setattr__(self, "bodies", labeled)

    def __len__(self) -> int:
        return len(self.bodies)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.bodies)

    def without(self, index: int) -> "Exhauster":
        if not 0 <= index < len(self.bodies):
            raise IndexError(f"body index {index} out of range")
        if len(self.bodies) == 1:
            raise ValidationError("cannot drop the only body of an exhauster")
        return Exhauster(self.bodies[:index] + self.bodies[index + 1 :])


def support_value(body: ConvexBody, direction: Direction) -> float:
    """Support function H(body, u_theta): the largest <v, u_theta> over the body."""
    c, s = direction.unit
    if body.kind == "disc":
        assert body.center is not None
        return body.center.x * c + body.center.y * s + body.radius
    return max(v.x * c + v.y * s for v in body.vertices)


def contains(outer: ConvexBody, inner: ConvexBody, tol: float = CONTAINMENT_TOL) -> bool:
    """True iff ``inner`` is a subset of ``outer``.

    Decided through support dominance: inner is contained in outer exactly
    when the support curve of inner never exceeds the support curve of outer.
    The maximum of the curve difference is computed in closed form over the
    overlay of the two piece partitions, not by sampling.
    """
    # imported here: support/envelope depend on this module's types
    from .envelope import curve_difference_max
    from .support import support_curve

    gap, _ = curve_difference_max(support_curve(inner), support_curve(outer))
    return gap <= tol


def _point_in_polygon(pt: Point2, poly: ConvexBody, eps: float = 1e-12) -> bool:
    verts = poly.vertices
    scale = max(1.0, *(abs(v.x) + abs(v.y) for v in verts), abs(pt.x) + abs(pt.y))
    if len(verts) == 1:
        return math.dist((pt.x, pt.y), (verts[0].x, verts[0].y)) <= eps * scale
    if len(verts) == 2:
        a, b = verts
        if abs(_cross((a.x, a.y), (b.x, b.y), (pt.x, pt.y))) > eps * scale * scale:
            return False
        t_num = (pt.x - a.x) * (b.x - a.x) + (pt.y - a.y) * (b.y - a.y)
        t_den = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
        return -eps * scale <= t_num <= t_den + eps * scale
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        if _cross((a.x, a.y), (b.x, b.y), (pt.x, pt.y)) < -eps * scale * scale:
            return False
    return True


def _half_planes(body: ConvexBody) -> list[tuple[float, float, float]]:
    """Half-plane description {(nx, ny, c) : nx*x + ny*y <= c} of a polygon body."""
    verts = body.vertices
    planes: list[tuple[float, float, float]] = []
    if len(verts) == 2:
        a, b = verts
        dx, dy = b.x - a.x, b.y - a.y
        n = math.hypot(dx, dy)
        dx, dy = dx / n, dy / n
        # the thin slab around the carrier line, then the two end caps
        planes.append((-dy, dx, -dy * a.x + dx * a.y))
        planes.append((dy, -dx, dy * a.x - dx * a.y))
        planes.append((-dx, -dy, -dx * a.x - dy * a.y))
        planes.append((dx, dy, dx * b.x + dy * b.y))
        return planes
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        dx, dy = b.x - a.x, b.y - a.y
        n = math.hypot(dx, dy)
        nx, ny = dy / n, -dx / n  # outward normal of a CCW edge
        planes.append((nx, ny, nx * a.x + ny * a.y))
    return planes


def _clip_ring(
    ring: list[tuple[float, float]], plane: tuple[float, float, float], eps: float
) -> list[tuple[float, float]]:
    nx, ny, c = plane
    out: list[tuple[float, float]] = []
    k = len(ring)
    for i in range(k):
        s, e = ring[i], ring[(i + 1) % k]
        ds = nx * s[0] + ny * s[1] - c
        de = nx * e[0] + ny * e[1] - c
        s_in, e_in = ds <= eps, de <= eps
        if s_in:
            out.append(s)
        if s_in != e_in and ds != de:
            t = ds / (ds - de)
            out.append((s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])))
    return out


def intersect_polygons(a: ConvexBody, b: ConvexBody) -> ConvexBody | None:
    """Intersection of two polygon bodies, or None when it is empty.

    Computed by clipping ``a`` against every half-plane of ``b``
    (Sutherland-Hodgman), then canonicalizing. Members of an exhauster may
    well be disjoint, hence the explicit empty marker: the empty set is not
    a ConvexBody.
    """
    if a.kind != "polygon" or b.kind != "polygon":
        raise UnsupportedKindError("intersection is only defined for polygon bodies")
    if len(a.vertices) == 1:
        return a.with_label("") if _point_in_polygon(a.vertices[0], b) else None
    if len(b.vertices) == 1:
        return b.with_label("") if _point_in_polygon(b.vertices[0], a) else None

    scale = max(
        1.0, *(abs(v.x) + abs(v.y) for v in a.vertices), *(abs(v.x) + abs(v.y) for v in b.vertices)
    )
    eps = 1e-12 * scale
    ring = [(v.x, v.y) for v in a.vertices]
    for plane in _half_planes(b):
        ring = _clip_ring(ring, plane, eps)
        if not ring:
            return None
    return canonicalize_polygon([Point2(x, y) for x, y in ring])
