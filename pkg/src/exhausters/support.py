"""Exact piecewise-sinusoid support curves over direction angles.

Restricted to unit directions u_theta = (cos theta, sin theta), the support
function of a planar convex body is a circular piecewise sinusoid: a polygon
vertex (x, y) contributes the curve x*cos(theta) + y*sin(theta) on the arc of
directions where that vertex attains the maximum, adjacent pieces meeting at
the outer-normal angle of the shared edge; a disc of center (cx, cy) and
radius r contributes the single curve cx*cos(theta) + cy*sin(theta) + r.
Arcs are half-open [start, end) and partition [0, 2*pi).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

from .geometry import TAU, ConvexBody, Point2, ValidationError, norm_angle


@dataclass(frozen=True)
class Sinusoid:
    """The curve theta -> a*cos(theta) + b*sin(theta) + c.

    Equivalently amplitude * sin(theta + phase) + c with
    amplitude = hypot(a, b) and phase = atan2(a, b).
    """

    a: float
    b: float
    c: float = 0.0

    def value(self, theta: float) -> float:
        return self.a * math.cos(theta) + self.b * math.sin(theta) + self.c

    @property
    def amplitude(self) -> float:
        return math.hypot(self.a, self.b)

    @property
    def phase(self) -> float:
        return math.atan2(self.a, self.b)

    def __sub__(self, other: "Sinusoid") -> "Sinusoid":
        return Sinusoid(self.a - other.a, self.b - other.b, self.c - other.c)


def vertex_sinusoid(v: Point2) -> Sinusoid:
    """The support curve of the singleton {v}."""
    return Sinusoid(v.x, v.y, 0.0)


@dataclass(frozen=True)
class Arc:
    """A circular arc of positive length, half-open at its end.

    ``start`` and ``end`` both live in [0, 2*pi); ``wraps`` marks arcs that
    cross the 0/2*pi seam. A full circle is Arc(s, s, wraps=True).
    """

    start: float
    end: float
    wraps: bool = False

    def __post_init__(self) -> None:
        s, e = float(self.start), float(self.end)
        if not (math.isfinite(s) and math.isfinite(e)):
            raise ValidationError("arc endpoints must be finite")
        if not (0.0 <= s < TAU and 0.0 <= e < TAU):
            raise ValidationError("arc endpoints must lie in [0, 2*pi)")
        if self.wraps:
            if e > s:
                raise ValidationError("a wrapping arc must end at or before its start angle")
        elif e <= s:
            raise ValidationError("a non-wrapping arc must have positive length")
        object.__setattr__(self, "start", s)
        object.__setattr__(self, "end", e)

    @staticmethod
    def full(start: float = 0.0) -> "Arc":
        s = norm_angle(start)
        return Arc(s, s, wraps=True)

    @staticmethod
    def span(start: float, length: float) -> "Arc":
        if not 0.0 < length <= TAU:
            raise ValidationError(f"arc length must lie in (0, 2*pi], got {length}")
        s = norm_angle(start)
        e = norm_angle(s + length)
        return Arc(s, e, wraps=e <= s)

    @property
    def length(self) -> float:
        if self.wraps:
            return self.end - self.start + TAU
        return self.end - self.start

    @property
    def midpoint(self) -> float:
        return norm_angle(self.start + 0.5 * self.length)

    def contains(self, theta: float) -> bool:
        t = norm_angle(theta)
        if self.wraps:
            return t >= self.start or t < self.end
        return self.start <= t < self.end

    def contains_closed(self, theta: float) -> bool:
        t = norm_angle(theta)
        if self.wraps:
            return t >= self.start or t <= self.end
        return self.start <= t <= self.end

    def cut_at_zero(self) -> tuple["Arc", ...]:
        """Split a wrapping arc at the seam, for interval-style reporting."""
        if not self.wraps or self.start == 0.0:
            return (self,)
        pieces: list[Arc] = [Arc(self.start, 0.0, wraps=True)]
        if self.end > 0.0:
            pieces.append(Arc(0.0, self.end))
        return tuple(pieces)


@dataclass(frozen=True)
class CurvePiece:
    """One sinusoid of a support curve and the arc on which it is active."""

    arc: Arc
    sinusoid: Sinusoid
    source: int | str  # vertex index, or "disc"


@dataclass(frozen=True)
class SupportCurve:
    """A circular sequence of sinusoid pieces whose arcs partition [0, 2*pi).

    Pieces are kept sorted by arc start; at most one piece wraps the seam.
    Evaluation at a shared breakpoint uses the succeeding piece, which agrees
    with the preceding one because the curve is continuous.
    """

    pieces: tuple[CurvePiece, ...]
    _starts: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pieces = tuple(sorted(self.pieces, key=lambda p: p.arc.start))
        if not pieces:
            raise ValidationError("a support curve needs at least one piece")
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_starts", tuple(p.arc.start for p in pieces))

    def piece_at(self, theta: float) -> CurvePiece:
        t = norm_angle(theta)
        i = bisect_right(self._starts, t) - 1
        piece = self.pieces[i]  # i == -1 selects the wrapping piece
        if piece.arc.contains(t):
            return piece
        for p in self.pieces:  # defensive: rounding placed t in a seam
            if p.arc.contains(t):
                return p
        return piece

    def value(self, theta: float) -> float:
        return self.piece_at(theta).sinusoid.value(theta)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return self._starts


def support_curve(body: ConvexBody) -> SupportCurve:
    """The exact support curve of a body.

    For a CCW polygon with k >= 3 vertices this is the upper envelope of its
    vertex sinusoids; the breakpoints are exactly the k edge-normal angles and
    vertex j is active between the normals of its two incident edges. A
    segment splits at the two normals of its carrier line, singletons and
    discs are a single full-circle piece.
    """
    if body.kind == "disc":
        assert body.center is not None
        sin = Sinusoid(body.center.x, body.center.y, body.radius)
        return SupportCurve((CurvePiece(Arc.full(), sin, "disc"),))

    verts = body.vertices
    if len(verts) == 1:
        return SupportCurve((CurvePiece(Arc.full(), vertex_sinusoid(verts[0]), 0),))

    if len(verts) == 2:
        v0, v1 = verts
        heading = math.atan2(v1.y - v0.y, v1.x - v0.x)
        n_right = norm_angle(heading - 0.5 * math.pi)
        n_left = norm_angle(heading + 0.5 * math.pi)
        return SupportCurve(
            (
                CurvePiece(Arc(n_right, n_left, wraps=n_left <= n_right), vertex_sinusoid(v1), 1),
                CurvePiece(Arc(n_left, n_right, wraps=n_right <= n_left), vertex_sinusoid(v0), 0),
            )
        )

    k = len(verts)
    normals = []
    for j in range(k):
        a, b = verts[j], verts[(j + 1) % k]
        normals.append(norm_angle(math.atan2(b.y - a.y, b.x - a.x) - 0.5 * math.pi))
    pieces = []
    for j in range(k):
        start, end = normals[j], normals[(j + 1) % k]
        arc = Arc(start, end, wraps=end <= start)
        active = (j + 1) % k
        pieces.append(CurvePiece(arc, vertex_sinusoid(verts[active]), active))
    return SupportCurve(tuple(pieces))


def eval_curve(curve: SupportCurve, theta: float) -> float:
    """Value of the curve at ``theta`` (taken mod 2*pi)."""
    return curve.value(theta)


def sample_curve(curve: SupportCurve, n: int) -> list[tuple[float, float]]:
    """``n`` uniformly spaced (theta, rho) samples on [0, 2*pi)."""
    if n < 2:
        raise ValidationError(f"need at least 2 samples, got {n}")
    step = TAU / n
    return [(i * step, curve.value(i * step)) for i in range(n)]
