"""Lower envelopes of support curves and closed-form sinusoid analysis.

Everything here reduces to one identity: the difference of two sinusoid
pieces is again a sinusoid, R*sin(theta + psi) + dc with
R = hypot(da, db) and psi = atan2(da, db), so crossings, dominance regions
and extrema of curve differences all have exact closed forms. The envelope
itself is swept over candidate breakpoints (every input piece boundary plus
every pairwise crossing) with a midpoint test per elementary arc; family
sizes in exhausters are small, so auditability beats asymptotics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import TAU, ValidationError, norm_angle
from .support import Arc, CurvePiece, Sinusoid, SupportCurve

# Equality tolerance on rho values ("this curve attains the envelope").
DEFAULT_TOL = 1e-9
# |R - |dc|| at or below this is classified as a tangency.
TANGENT_EPS = 1e-12
# Candidate angles closer than this are treated as one breakpoint.
ANGLE_EPS = 1e-12


def sinusoid_intersections(s1: Sinusoid, s2: Sinusoid) -> tuple[float, ...] | None:
    """Angles in [0, 2*pi) where the two sinusoids are equal.

    Returns None when the curves coincide everywhere, a 1-tuple for a
    tangency, and an empty or 2-tuple otherwise.
    """
    da, db = s1.a - s2.a, s1.b - s2.b
    d = s2.c - s1.c  # solve da*cos + db*sin = d
    r = math.hypot(da, db)
    if r < TANGENT_EPS and abs(d) < TANGENT_EPS:
        return None
    if r < abs(d) - TANGENT_EPS:
        return ()
    psi = math.atan2(da, db)
    if abs(r - abs(d)) <= TANGENT_EPS:
        peak = 0.5 * math.pi if d >= 0.0 else -0.5 * math.pi
        return (norm_angle(peak - psi),)
    alpha = math.asin(max(-1.0, min(1.0, d / r)))
    roots = sorted({norm_angle(alpha - psi), norm_angle(math.pi - alpha - psi)})
    if len(roots) == 2 and roots[1] - roots[0] < ANGLE_EPS:
        roots = roots[:1]
    return tuple(roots)


def difference_max(s1: Sinusoid, s2: Sinusoid, arc: Arc) -> tuple[float, float]:
    """Maximum of s1 - s2 over the closed arc, with its argmax angle.

    The difference is R*sin(theta + psi) + dc, so the only candidates are
    the two arc endpoints and the interior peak at pi/2 - psi.
    """
    da, db, dc = s1.a - s2.a, s1.b - s2.b, s1.c - s2.c

    def diff(theta: float) -> float:
        return da * math.cos(theta) + db * math.sin(theta) + dc

    candidates = [arc.start, arc.start + arc.length]
    peak = norm_angle(0.5 * math.pi - math.atan2(da, db))
    if arc.contains(peak):
        candidates.append(peak)
    best_val, best_arg = -math.inf, arc.start
    for t in candidates:
        v = diff(t)
        if v > best_val:
            best_val, best_arg = v, norm_angle(t)
    return best_val, best_arg


def _circular_cuts(angles) -> list[float]:
    """Sorted distinct angles in [0, 2*pi), merging near-duplicates wrap-aware."""
    cuts: list[float] = []
    for t in sorted(norm_angle(a) for a in angles):
        if not cuts or t - cuts[-1] > ANGLE_EPS:
            cuts.append(t)
    if len(cuts) > 1 and (cuts[0] + TAU) - cuts[-1] <= ANGLE_EPS:
        cuts.pop()
    return cuts


def _elementary_arcs(cuts: list[float]) -> list[Arc]:
    if len(cuts) == 1:
        return [Arc.full(cuts[0])]
    arcs = []
    for i, start in enumerate(cuts):
        end = cuts[(i + 1) % len(cuts)]
        arcs.append(Arc(start, end, wraps=end <= start))
    return arcs


def _merge_run(items: list[tuple[Arc, object]]) -> list[tuple[Arc, object]]:
    """Merge circularly adjacent (arc, key) entries with equal keys."""
    if not items:
        return items
    merged: list[tuple[Arc, object]] = [items[0]]
    for arc, key in items[1:]:
        last_arc, last_key = merged[-1]
        if key == last_key and arc.start == last_arc.end:
            merged[-1] = (Arc(last_arc.start, arc.end, wraps=arc.end <= last_arc.start), key)
        else:
            merged.append((arc, key))
    if len(merged) > 1:
        first_arc, first_key = merged[0]
        last_arc, last_key = merged[-1]
        if first_key == last_key and first_arc.start == last_arc.end:
            merged[0] = (
                Arc(last_arc.start, first_arc.end, wraps=first_arc.end <= last_arc.start),
                first_key,
            )
            merged.pop()
    if len(merged) == 1 and abs(merged[0][0].length - TAU) < ANGLE_EPS * 4:
        merged[0] = (Arc.full(merged[0][0].start), merged[0][1])
    return merged


def dominance_arcs(s1: Sinusoid, s2: Sinusoid, tol: float = DEFAULT_TOL) -> list[Arc]:
    """Maximal arcs on which s1(theta) <= s2(theta) + tol.

    Derived from the exact crossings: the circle is split at the crossing
    angles and each resulting arc is classified by its midpoint. Returns a
    single full-circle arc when s1 is dominated everywhere, an empty list
    when it never is.
    """
    roots = sinusoid_intersections(s1, s2)
    if roots is None:
        return [Arc.full()]
    if not roots:
        return [Arc.full()] if s1.value(0.0) <= s2.value(0.0) + tol else []
    arcs = _elementary_arcs(list(roots))
    kept = [(arc, s1.value(arc.midpoint) <= s2.value(arc.midpoint) + tol) for arc in arcs]
    merged = _merge_run([(arc, flag) for arc, flag in kept])
    return [arc for arc, flag in merged if flag]


@dataclass(frozen=True)
class Envelope:
    """The pointwise minimum of a family of support curves.

    ``curve`` is the envelope as a support curve whose piece sources are the
    winning body indices; ``attaining`` lists, per piece, every body index
    whose curve stays within tolerance of the minimum on that piece.
    """

    curve: SupportCurve
    attaining: tuple[frozenset[int], ...]

    def value(self, theta: float) -> float:
        return self.curve.value(theta)


def lower_envelope(curves: list[SupportCurve], tol: float = DEFAULT_TOL) -> Envelope:
    """Exact lower envelope of the given support curves.

    Candidate breakpoints are every piece boundary of every input plus every
    pairwise sinusoid crossing that falls inside both pieces' arcs. On each
    elementary arc the winner is chosen at the arc midpoint (ties to the
    lowest index); adjacent arcs with the same winning sinusoid and the same
    attaining set are merged back together.
    """
    if not curves:
        raise ValidationError("lower_envelope needs at least one curve")

    candidates: list[float] = []
    for curve in curves:
        candidates.extend(curve.breakpoints)
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            for pi in curves[i].pieces:
                for pj in curves[j].pieces:
                    roots = sinusoid_intersections(pi.sinusoid, pj.sinusoid)
                    if not roots:
                        continue
                    for t in roots:
                        if pi.arc.contains(t) and pj.arc.contains(t):
                            candidates.append(t)

    arcs = _elementary_arcs(_circular_cuts(candidates))
    raw: list[tuple[Arc, Sinusoid, int, frozenset[int]]] = []
    for arc in arcs:
        mid = arc.midpoint
        values = [c.value(mid) for c in curves]
        low = min(values)
        winner = values.index(low)
        attaining = frozenset(k for k, v in enumerate(values) if v <= low + tol)
        raw.append((arc, curves[winner].piece_at(mid).sinusoid, winner, attaining))

    merged = _merge_run([(arc, (sin, win, att)) for arc, sin, win, att in raw])
    pieces = []
    attaining_sets = []
    for arc, key in merged:
        sin, win, att = key  # type: ignore[misc]
        pieces.append(CurvePiece(arc, sin, win))
        attaining_sets.append(att)
    order = sorted(range(len(pieces)), key=lambda k: pieces[k].arc.start)
    return Envelope(
        curve=SupportCurve(tuple(pieces[k] for k in order)),
        attaining=tuple(attaining_sets[k] for k in order),
    )


def _overlay_cuts(c1: SupportCurve, c2: SupportCurve) -> list[float]:
    return _circular_cuts(list(c1.breakpoints) + list(c2.breakpoints))


def curve_difference_max(
    c1: SupportCurve, c2: SupportCurve, arc: Arc | None = None
) -> tuple[float, float]:
    """Maximum of c1(theta) - c2(theta) over ``arc`` (default: the full circle).

    Exact: the overlay of the two piece partitions is refined against the
    arc and `difference_max` is applied piece by piece.
    """
    cuts = _overlay_cuts(c1, c2)
    if arc is None:
        arc = Arc.full(cuts[0])
    offsets = {0.0, arc.length}
    for t in cuts:
        off = norm_angle(t - arc.start)
        if 0.0 < off < arc.length:
            offsets.add(off)
    grid = sorted(offsets)
    best_val, best_arg = -math.inf, arc.start
    for o1, o2 in zip(grid[:-1], grid[1:]):
        if o2 - o1 <= ANGLE_EPS:
            continue
        sub = Arc.span(norm_angle(arc.start + o1), o2 - o1)
        mid = sub.midpoint
        v, t = difference_max(c1.piece_at(mid).sinusoid, c2.piece_at(mid).sinusoid, sub)
        if v > best_val:
            best_val, best_arg = v, t
    return best_val, best_arg


def curve_le_regions(
    c1: SupportCurve, c2: SupportCurve, tol: float = DEFAULT_TOL
) -> tuple[list[Arc], list[Arc]]:
    """Split the circle into maximal arcs by the sign of c1 - c2 - tol.

    Returns ``(le, gt)``: the arcs where c1 <= c2 + tol and the arcs where
    c1 > c2 + tol. Either list may be a single full-circle arc.
    """
    cuts = _overlay_cuts(c1, c2)
    refined = list(cuts)
    for arc in _elementary_arcs(cuts):
        mid = arc.midpoint
        s1 = c1.piece_at(mid).sinusoid
        s2 = c2.piece_at(mid).sinusoid
        roots = sinusoid_intersections(s1, Sinusoid(s2.a, s2.b, s2.c + tol))
        if not roots:
            continue
        refined.extend(t for t in roots if arc.contains(t))
    arcs = _elementary_arcs(_circular_cuts(refined))
    flagged = []
    for arc in arcs:
        mid = arc.midpoint
        flagged.append((arc, c1.value(mid) <= c2.value(mid) + tol))
    merged = _merge_run(flagged)
    le = [arc for arc, flag in merged if flag]
    gt = [arc for arc, flag in merged if not flag]
    return le, gt
