import itertools
import math
import random

import numpy as np
import pytest

from exhausters import (
    Arc,
    ConvexBody,
    Point2,
    Sinusoid,
    ValidationError,
    curve_difference_max,
    difference_max,
    dominance_arcs,
    lower_envelope,
    sinusoid_intersections,
    support_curve,
    vertex_sinusoid,
)

from families import example2, example4, random_polygon, tangent_discs
from oracles import curve_grid, family_grid, unit_grid

TAU = 2 * math.pi


def random_sinusoid(rng, with_offset=True):
    return Sinusoid(
        rng.uniform(-5, 5),
        rng.uniform(-5, 5),
        rng.uniform(-2, 2) if with_offset else 0.0,
    )


class TestIntersections:
    def test_cos_meets_sin(self):
        roots = sinusoid_intersections(Sinusoid(1, 0, 0), Sinusoid(0, 1, 0))
        assert roots == pytest.approx((math.pi / 4, 5 * math.pi / 4), abs=1e-12)

    def test_identical(self):
        assert sinusoid_intersections(Sinusoid(1, 0, 0), Sinusoid(1, 0, 0)) is None

    def test_disjoint_constants(self):
        assert sinusoid_intersections(Sinusoid(0, 0, 1), Sinusoid(0, 0, 0)) == ()

    def test_tangent_disc_touches_zero_once(self):
        t = 1.1
        disc_curve = Sinusoid(math.cos(t), math.sin(t), 1.0)
        roots = sinusoid_intersections(vertex_sinusoid(Point2(0, 0)), disc_curve)
        assert len(roots) == 1
        assert roots[0] == pytest.approx((t + math.pi) % TAU, abs=1e-9)

    def test_roots_are_real_crossings(self):
        rng = random.Random(2)
        for _ in range(500):
            s1, s2 = random_sinusoid(rng), random_sinusoid(rng)
            roots = sinusoid_intersections(s1, s2)
            if roots is None:
                continue
            for t in roots:
                assert abs(s1.value(t) - s2.value(t)) < 1e-9


class TestDifferenceMax:
    def test_cosine_peak(self):
        value, arg = difference_max(Sinusoid(1, 0, 0), Sinusoid(0, 0, 0), Arc.full(0.0))
        assert value == pytest.approx(1.0, abs=1e-12)
        assert arg == pytest.approx(0.0, abs=1e-12)

    def test_increasing_on_quarter(self):
        value, arg = difference_max(
            Sinusoid(0, 0, 0), Sinusoid(1, 0, 0), Arc(0.0, math.pi / 2)
        )
        assert value == pytest.approx(0.0, abs=1e-12)
        assert arg == pytest.approx(math.pi / 2, abs=1e-12)

    def test_equal_sinusoids(self):
        s = Sinusoid(2, -1, 0.5)
        value, arg = difference_max(s, s, Arc(0.3, 4.0))
        assert value == 0.0
        assert arg == pytest.approx(0.3)

    def test_agrees_with_grid_scan(self):
        rng = random.Random(4)
        thetas = np.linspace(0.0, TAU, 1_000_000, endpoint=False)
        for _ in range(5):
            s1, s2 = random_sinusoid(rng), random_sinusoid(rng)
            d = (s1.a - s2.a) * np.cos(thetas) + (s1.b - s2.b) * np.sin(thetas) + (s1.c - s2.c)
            value, _ = difference_max(s1, s2, Arc.full(0.0))
            assert value == pytest.approx(d.max(), abs=1e-9)

    def test_agrees_with_grid_scan_on_arcs(self):
        rng = random.Random(6)
        for _ in range(50):
            s1, s2 = random_sinusoid(rng), random_sinusoid(rng)
            start = rng.uniform(0, TAU)
            length = rng.uniform(0.1, TAU)
            arc = Arc.span(start, length)
            offs = np.linspace(0.0, length, 20_001)
            thetas = start + offs
            d = (s1.a - s2.a) * np.cos(thetas) + (s1.b - s2.b) * np.sin(thetas) + (s1.c - s2.c)
            value, arg = difference_max(s1, s2, arc)
            assert value >= d.max() - 1e-9
            assert value == pytest.approx(s1.value(arg) - s2.value(arg), abs=1e-12)


class TestDominanceArcs:
    def test_crossing_matches_analytic_angle(self):
        # vertex (-2,-2) against the -cos(theta) piece of a triangle curve
        arcs = dominance_arcs(vertex_sinusoid(Point2(-2, -2)), Sinusoid(-1, 0, 0))
        endpoints = {a.start for a in arcs} | {a.end for a in arcs}
        theta1 = math.pi - math.atan(0.5)
        assert any(abs(e - theta1) < 1e-9 for e in endpoints)

    def test_identical_gives_full_circle(self):
        s = Sinusoid(1, 2, 3)
        arcs = dominance_arcs(s, s)
        assert len(arcs) == 1 and arcs[0].length == pytest.approx(TAU)

    def test_constants(self):
        assert dominance_arcs(Sinusoid(0, 0, 1), Sinusoid(0, 0, 0)) == []
        arcs = dominance_arcs(Sinusoid(0, 0, 0), Sinusoid(0, 0, 1))
        assert len(arcs) == 1 and arcs[0].length == pytest.approx(TAU)

    def test_arcs_classify_sign(self):
        rng = random.Random(9)
        for _ in range(100):
            s1, s2 = random_sinusoid(rng), random_sinusoid(rng)
            arcs = dominance_arcs(s1, s2)
            for arc in arcs:
                mid = arc.midpoint
                assert s1.value(mid) <= s2.value(mid) + 1e-9


class TestLowerEnvelope:
    def test_single_curve_is_identity(self):
        curve = support_curve(ConvexBody.polygon([Point2(1, 2), Point2(2, 4), Point2(3, 2)]))
        env = lower_envelope([curve])
        thetas = unit_grid(512)
        assert np.abs(curve_grid(env.curve, thetas) - curve_grid(curve, thetas)).max() < 1e-12
        assert all(att == frozenset({0}) for att in env.attaining)

    def test_example2_value_at_zero(self):
        ex = example2()
        env = lower_envelope([support_curve(b) for b in ex.bodies])
        assert env.value(0.0) == pytest.approx(-2.0, abs=1e-12)
        piece_idx = next(
            k for k, p in enumerate(env.curve.pieces) if p.arc.contains(0.0)
        )
        assert env.attaining[piece_idx] == frozenset({2})

    def test_example4_quarters(self):
        ex = example4()
        env = lower_envelope([support_curve(b) for b in ex.bodies])
        quarters = {0: 1, 1: 2, 2: 3, 3: 0}  # quarter index -> winning body
        for q, owner in quarters.items():
            lo, hi = q * math.pi / 2, (q + 1) * math.pi / 2
            for frac in (0.25, 0.5, 0.75):
                theta = lo + frac * (hi - lo)
                piece_idx = next(
                    k for k, p in enumerate(env.curve.pieces) if p.arc.contains(theta)
                )
                assert env.attaining[piece_idx] == frozenset({owner})

    def test_matches_grid_oracle(self):
        rng = random.Random(31)
        thetas = unit_grid(100_000)
        for _ in range(12):
            n = rng.randint(1, 8)
            bodies = tuple(random_polygon(rng) for _ in range(n))
            curves = [support_curve(b) for b in bodies]
            env = lower_envelope(curves)
            got = curve_grid(env.curve, thetas)
            want = family_grid(
                type("ex", (), {"bodies": bodies})(), thetas
            ).min(axis=0)
            assert np.abs(got - want).max() < 1e-9

    def test_envelope_below_every_input_and_attained(self):
        rng = random.Random(33)
        thetas = unit_grid(2000)
        for _ in range(10):
            curves = [support_curve(random_polygon(rng)) for _ in range(4)]
            env = lower_envelope(curves)
            env_vals = curve_grid(env.curve, thetas)
            stack = np.vstack([curve_grid(c, thetas) for c in curves])
            assert (env_vals <= stack + 1e-12).all()
            assert np.abs(env_vals - stack.min(axis=0)).max() < 1e-9

    def test_order_invariant(self):
        rng = random.Random(35)
        thetas = unit_grid(4096)
        curves = [support_curve(random_polygon(rng)) for _ in range(5)]
        reference = curve_grid(lower_envelope(curves).curve, thetas)
        for perm in itertools.islice(itertools.permutations(curves), 8):
            values = curve_grid(lower_envelope(list(perm)).curve, thetas)
            assert np.abs(values - reference).max() < 1e-12

    def test_empty_family_rejected(self):
        with pytest.raises(ValidationError):
            lower_envelope([])

    def test_tangent_disc_family(self):
        ex = tangent_discs(16)
        curves = [support_curve(b) for b in ex.bodies]
        env = lower_envelope(curves)
        for k, body in enumerate(ex.bodies):
            alpha = math.atan2(body.center.y, body.center.x)
            tangency = (alpha + math.pi) % TAU
            assert env.value(tangency) >= -1e-12
            assert curves[k].value(tangency) == pytest.approx(0.0, abs=1e-12)
            roots = sinusoid_intersections(curves[k].pieces[0].sinusoid, Sinusoid(0, 0, 0))
            assert len(roots) == 1


class TestCurveDifference:
    def test_against_grid(self):
        # the difference of two curves has kinks, where a uniform grid
        # undershoots linearly; the closed form must dominate the scan and
        # actually attain its reported value
        rng = random.Random(41)
        thetas = unit_grid(200_000)
        for _ in range(10):
            c1 = support_curve(random_polygon(rng))
            c2 = support_curve(random_polygon(rng))
            value, arg = curve_difference_max(c1, c2)
            grid_max = (curve_grid(c1, thetas) - curve_grid(c2, thetas)).max()
            assert value >= grid_max - 1e-9
            assert value == pytest.approx(c1.value(arg) - c2.value(arg), abs=1e-9)
