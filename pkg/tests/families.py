"""Shared example families used across the test suite."""

import math

from exhausters import ConvexBody, Exhauster, Point2

# Crossing angles of the three-body family below, solved analytically:
# -cos(t) - 2*sin(t) = 0 and 2*cos(t) + sin(t) = 0 on the relevant quadrants.
THETA1 = math.pi - math.atan(0.5)
THETA2 = 2.0 * math.pi - math.atan(2.0)


def counterexample() -> Exhauster:
    """Two bodies whose pointwise-min support differs from their intersection's."""
    return Exhauster(
        (
            ConvexBody.polygon([Point2(1, 2), Point2(2, 4), Point2(3, 2)], "C1"),
            ConvexBody.polygon(
                [Point2(1, 1), Point2(1, 3), Point2(3, 1), Point2(3, 3)], "C2"
            ),
        )
    )


def example2() -> Exhauster:
    """Five bodies; C0 sits strictly above the envelope of the others."""
    return Exhauster(
        (
            ConvexBody.polygon([Point2(0, 0), Point2(1, 1), Point2(-1, 1)], "C0"),
            ConvexBody.polygon([Point2(1, 2)], "C1"),
            ConvexBody.polygon([Point2(-2, 1), Point2(-2, 2)], "C2"),
            ConvexBody.polygon([Point2(-1, -1)], "C3"),
            ConvexBody.polygon([Point2(-1, 1), Point2(-1, 2)], "C4"),
        )
    )


def example3() -> Exhauster:
    """Three bodies; C0 is covered by C1 and C2 on a three-interval partition."""
    return Exhauster(
        (
            ConvexBody.polygon([Point2(0, 0), Point2(-1, 0), Point2(0, -1)], "C0"),
            ConvexBody.polygon([Point2(-2, -2)], "C1"),
            ConvexBody.polygon(
                [Point2(0, 0), Point2(2, 0), Point2(0, 2), Point2(2, 2)], "C2"
            ),
        )
    )


def example4() -> Exhauster:
    """Four triangles, each owning one quarter of the circle on the envelope."""
    return Exhauster(
        (
            ConvexBody.polygon([Point2(-1, 0), Point2(0, 1), Point2(-1, 1)], "C1"),
            ConvexBody.polygon([Point2(-2, 0), Point2(0, -2), Point2(-2, -2)], "C2"),
            ConvexBody.polygon([Point2(3, 0), Point2(0, -3), Point2(3, -3)], "C3"),
            ConvexBody.polygon([Point2(4, 0), Point2(0, 4), Point2(4, 4)], "C4"),
        )
    )


def tangent_discs(n: int = 16) -> Exhauster:
    """n unit discs tangential to the origin, centers equally spaced on the circle."""
    return Exhauster(
        tuple(
            ConvexBody.disc(
                Point2(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)),
                1.0,
                f"B{k}",
            )
            for k in range(n)
        )
    )


def random_polygon(rng, max_vertices: int = 8, box: float = 5.0) -> ConvexBody:
    k = rng.randint(1, max_vertices)
    return ConvexBody.polygon(
        [Point2(rng.uniform(-box, box), rng.uniform(-box, box)) for _ in range(k)]
    )


def random_exhauster(rng, max_bodies: int = 6) -> Exhauster:
    n = rng.randint(2, max_bodies)
    return Exhauster(tuple(random_polygon(rng) for _ in range(n)))
