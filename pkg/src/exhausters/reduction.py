"""Reduction calculus for upper exhausters.

A body can be dropped from a family exactly when, at every direction angle,
some other member's support curve is at or below its own; equivalently when
the lower envelope of the remaining curves never exceeds the body's curve.
This module decides that criterion in closed form, produces certificates
for both outcomes (a witness partition of the circle, or a contact arc on
which the body is the unique minimum), certifies inclusion-minimality of a
family, and runs a deterministic greedy reduction to a fixpoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .envelope import (
    DEFAULT_TOL,
    Envelope,
    curve_difference_max,
    curve_le_regions,
    lower_envelope,
)
from .geometry import (
    TAU,
    ConvexBody,
    Direction,
    Exhauster,
    Point2,
    ValidationError,
    contains,
    support_value,
)
from .support import Arc, SupportCurve, support_curve

# Minimum length (radians) a contact arc must have to protect a body:
# single-point contact does not, see the tangent-disc family.
DEFAULT_DELTA_MIN = 1e-6


class CannotDiscardLastBody(ValueError):
    """Discarding was attempted on a single-body exhauster."""


class SubsetPresentError(ValueError):
    """A retention test requires that no proper subset of the body is present."""


@dataclass(frozen=True)
class WitnessInterval:
    """One interval of a discard partition and the body covering it."""

    arc: Arc
    witness: int


@dataclass(frozen=True)
class DiscardCertificate:
    """Evidence that a body is redundant.

    ``partition`` covers [0, 2*pi) with intervals cut at the 0 seam; on each
    interval the witness body's curve stays at or below the discarded body's
    curve (within tolerance). ``mode`` records how the discard was found:
    "single-superset" (one witness everywhere, i.e. a subset is present),
    "strict-dominance" (the body never touches the envelope), or the general
    "partition".
    """

    body: int
    mode: str
    partition: tuple[WitnessInterval, ...]


@dataclass(frozen=True)
class RetentionCertificate:
    """Evidence that a body cannot be discarded.

    ``contact`` is an arc on which the body coincides with the envelope and
    somewhere strictly undercuts every other member; ``margin`` is the
    minimum over the arc of (envelope of the others) - (body's curve).
    """

    body: int
    contact: Arc
    margin: float


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of the inclusion-minimality check.

    ``entries`` holds, per body, either its contact arc (kept) or a
    DiscardCertificate (removable). ``containment_violations`` lists ordered
    (inner, outer) index pairs with body[inner] a subset of body[outer].
    """

    minimal: bool
    entries: tuple[Arc | DiscardCertificate, ...]
    containment_violations: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RemovalRecord:
    """One removal performed by `reduce`.

    ``family`` lists the labels of the exhauster the certificate was computed
    against; the certificate's body/witness indices refer to that family.
    """

    label: str
    certificate: DiscardCertificate
    family: tuple[str, ...]


def evaluate_h(ex: Exhauster, g: Point2) -> float:
    """h(g) = min over bodies of max over the body of <v, g>; h(0) = 0."""
    if g.x == 0.0 and g.y == 0.0:
        return 0.0
    direction = Direction.from_vector(g.x, g.y)
    scale = math.hypot(g.x, g.y)
    return scale * min(support_value(b, direction) for b in ex.bodies)


def _check_index(ex: Exhauster, i: int) -> None:
    if not 0 <= i < len(ex.bodies):
        raise IndexError(f"body index {i} out of range for {len(ex.bodies)} bodies")


def _rest_envelope(ex: Exhauster, i: int, tol: float) -> tuple[Envelope, list[int]]:
    rest_idx = [j for j in range(len(ex.bodies)) if j != i]
    env = lower_envelope([support_curve(ex.bodies[j]) for j in rest_idx], tol)
    return env, rest_idx


def _partition_from_envelope(env: Envelope, rest_idx: list[int]) -> tuple[WitnessInterval, ...]:
    """Read the witness partition off the envelope pieces, merged by witness
    and cut at the 0 seam so intervals run 0 = a_0 < ... < a_n = 2*pi."""
    from .envelope import _merge_run  # same merge discipline as the envelope

    items = [(p.arc, rest_idx[p.source]) for p in env.curve.pieces]
    merged = _merge_run(items)
    intervals: list[WitnessInterval] = []
    for arc, witness in merged:
        for part in arc.cut_at_zero():
            intervals.append(WitnessInterval(part, witness))  # type: ignore[arg-type]
    intervals.sort(key=lambda w: w.arc.start)
    return tuple(intervals)


def is_discardable(
    ex: Exhauster, i: int, tol: float = DEFAULT_TOL
) -> DiscardCertificate | RetentionCertificate:
    """Decide whether body ``i`` can be removed without changing h.

    The body is discardable iff the lower envelope of the other curves never
    exceeds its own curve by more than ``tol``. On success the witness
    partition is read off the envelope (each piece's winner covers its arc);
    on failure the certificate carries a maximal arc on which the body
    strictly undercuts all others.
    """
    _check_index(ex, i)
    if len(ex.bodies) < 2:
        raise CannotDiscardLastBody("cannot discard from a single-body exhauster")
    env, rest_idx = _rest_envelope(ex, i, tol)
    own = support_curve(ex.bodies[i])
    gap, _ = curve_difference_max(env.curve, own)

    if gap <= tol:
        partition = _partition_from_envelope(env, rest_idx)
        if len({w.witness for w in partition}) == 1 and sum(
            w.arc.length for w in partition
        ) >= TAU - 1e-9:
            mode = "single-superset"
        elif gap < -tol:
            mode = "strict-dominance"
        else:
            mode = "partition"
        return DiscardCertificate(body=i, mode=mode, partition=partition)

    _, gt = curve_le_regions(env.curve, own, tol)
    _, peak = curve_difference_max(env.curve, own)
    arc = next((a for a in gt if a.contains_closed(peak)), gt[0])
    margin = -curve_difference_max(own, env.curve, arc)[0]
    return RetentionCertificate(body=i, contact=arc, margin=margin)


def check_strict_dominance(ex: Exhauster, i: int, tol: float = DEFAULT_TOL) -> bool:
    """True iff body ``i``'s curve sits strictly above the envelope everywhere."""
    _check_index(ex, i)
    if len(ex.bodies) < 2:
        raise ValidationError("strict dominance needs at least two bodies")
    env, _ = _rest_envelope(ex, i, tol)
    gap, _ = curve_difference_max(env.curve, support_curve(ex.bodies[i]))
    return gap < -tol


def find_dominating_subset(ex: Exhauster, i: int) -> int | None:
    """Lowest index j != i with body j a subset of body i, or None."""
    _check_index(ex, i)
    for j in range(len(ex.bodies)):
        if j != i and contains(ex.bodies[i], ex.bodies[j]):
            return j
    return None


def partition_certificate(
    ex: Exhauster, i: int, tol: float = DEFAULT_TOL
) -> DiscardCertificate | None:
    """The explicit witness partition for body ``i``, or None when retained."""
    result = is_discardable(ex, i, tol)
    return result if isinstance(result, DiscardCertificate) else None


def retention_certificate(
    ex: Exhauster,
    i: int,
    tol: float = DEFAULT_TOL,
    delta_min: float = DEFAULT_DELTA_MIN,
) -> RetentionCertificate | None:
    """A contact arc certifying that body ``i`` cannot be discarded.

    Requires that no proper subset of the body is present (supersets must be
    removed first); raises SubsetPresentError otherwise. Returns an arc of
    length at least ``delta_min`` on which the body's curve coincides with
    the envelope and somewhere strictly undercuts every other member, or
    None when no such arc exists.
    """
    _check_index(ex, i)
    if len(ex.bodies) < 2:
        raise ValidationError("a retention test needs at least two bodies")
    for j in range(len(ex.bodies)):
        if j == i:
            continue
        if contains(ex.bodies[i], ex.bodies[j]) and not contains(ex.bodies[j], ex.bodies[i]):
            raise SubsetPresentError(
                f"body {ex.bodies[j].label} is a proper subset of {ex.bodies[i].label}"
            )
    env, _ = _rest_envelope(ex, i, tol)
    own = support_curve(ex.bodies[i])
    le, _ = curve_le_regions(own, env.curve, tol)
    for arc in sorted(le, key=lambda a: a.start):
        if arc.length < delta_min:
            continue
        strict, _ = curve_difference_max(env.curve, own, arc)
        if strict > tol:
            margin = -curve_difference_max(own, env.curve, arc)[0]
            return RetentionCertificate(body=i, contact=arc, margin=margin)
    return None


def _superset_certificate(inner: int, outer: int) -> DiscardCertificate:
    return DiscardCertificate(
        body=outer,
        mode="single-superset",
        partition=(WitnessInterval(Arc.full(0.0), inner),),
    )


def _contact_arcs(env: Envelope, body_index: int) -> list[Arc]:
    from .envelope import _merge_run

    items = [(p.arc, body_index in att) for p, att in zip(env.curve.pieces, env.attaining)]
    merged = _merge_run(items)
    return [arc for arc, flag in merged if flag]


def check_minimal(
    ex: Exhauster, tol: float = DEFAULT_TOL, delta_min: float = DEFAULT_DELTA_MIN
) -> MinimalityReport:
    """Certify or refute inclusion-minimality of the family.

    The family is minimal iff its members do not contain one another and
    every body owns a contact arc of length at least ``delta_min`` on which
    its curve coincides with the envelope. Supersets get single-witness
    discard certificates; bodies without a contact arc get full discard
    certificates against the rest of the family.
    """
    n = len(ex.bodies)
    violations = []
    for outer in range(n):
        for inner in range(n):
            if inner != outer and contains(ex.bodies[outer], ex.bodies[inner]):
                violations.append((inner, outer))
    supersets = {outer for _, outer in violations}

    env = lower_envelope([support_curve(b) for b in ex.bodies], tol)
    entries: list[Arc | DiscardCertificate] = []
    all_have_contact = True
    for i in range(n):
        arcs = [a for a in _contact_arcs(env, i) if a.length >= delta_min]
        contact = max(arcs, key=lambda a: a.length) if arcs else None
        if contact is None:
            all_have_contact = False
        if i in supersets:
            inner = min(j for j, outer in violations if outer == i)
            entries.append(_superset_certificate(inner, i))
        elif contact is not None:
            entries.append(contact)
        elif n >= 2:
            result = is_discardable(ex, i, tol)
            entries.append(
                result if isinstance(result, DiscardCertificate) else result.contact
            )
        else:
            entries.append(Arc.full(0.0))  # single body: its curve is the envelope

    minimal = not violations and all_have_contact
    return MinimalityReport(
        minimal=minimal, entries=tuple(entries), containment_violations=tuple(violations)
    )


def _grid_h_values(bodies: tuple[ConvexBody, ...], cos_t: list[float], sin_t: list[float]) -> list[float]:
    per_body = []
    for b in bodies:
        if b.kind == "disc":
            assert b.center is not None
            cx, cy, r = b.center.x, b.center.y, b.radius
            per_body.append([cx * c + cy * s + r for c, s in zip(cos_t, sin_t)])
        else:
            verts = [(v.x, v.y) for v in b.vertices]
            per_body.append(
                [max(x * c + y * s for x, y in verts) for c, s in zip(cos_t, sin_t)]
            )
    return [min(col) for col in zip(*per_body)]


def _verify_same_h(
    original: Exhauster, reduced: Exhauster, tol_total: float, n: int
) -> None:
    thetas = [TAU * k / n for k in range(n)]
    cos_t = [math.cos(t) for t in thetas]
    sin_t = [math.sin(t) for t in thetas]
    h_orig = _grid_h_values(original.bodies, cos_t, sin_t)
    h_red = _grid_h_values(reduced.bodies, cos_t, sin_t)
    worst = max(abs(a - b) for a, b in zip(h_orig, h_red))
    if worst > tol_total + 1e-12:
        raise RuntimeError(
            f"reduction changed h by {worst:.3e} (> {tol_total:.3e}) on the verification grid"
        )


def reduce(
    ex: Exhauster,
    tol: float = DEFAULT_TOL,
    delta_min: float = DEFAULT_DELTA_MIN,
    verify_grid: int = 10_000,
) -> tuple[Exhauster, tuple[RemovalRecord, ...]]:
    """Greedily remove redundant bodies until nothing more can go.

    Deterministic: first drops supersets (ascending index, restarting after
    each removal), then repeatedly scans ascending indices applying the
    discard test against the current family, removing the first discardable
    body and restarting until a full pass removes nothing. The output is
    verified to represent the same h on a ``verify_grid``-direction grid.
    ``delta_min`` is accepted for interface parity with the certificate
    operations; the discard criterion itself does not need it.
    """
    del delta_min
    bodies = list(ex.bodies)
    log: list[RemovalRecord] = []

    changed = True
    while changed and len(bodies) > 1:
        changed = False
        current = Exhauster(tuple(bodies))
        for i in range(len(bodies)):
            j = find_dominating_subset(current, i)
            if j is not None:
                log.append(
                    RemovalRecord(
                        label=bodies[i].label,
                        certificate=_superset_certificate(j, i),
                        family=current.labels,
                    )
                )
                del bodies[i]
                changed = True
                break

    changed = True
    while changed and len(bodies) > 1:
        changed = False
        current = Exhauster(tuple(bodies))
        for i in range(len(bodies)):
            result = is_discardable(current, i, tol)
            if isinstance(result, DiscardCertificate):
                log.append(
                    RemovalRecord(
                        label=bodies[i].label, certificate=result, family=current.labels
                    )
                )
                del bodies[i]
                changed = True
                break

    reduced = Exhauster(tuple(bodies))
    if verify_grid:
        _verify_same_h(ex, reduced, tol * (1 + len(log)), verify_grid)
    return reduced, tuple(log)
