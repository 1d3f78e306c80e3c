import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from keeperlab import (
    Circle2,
    DegenerateLineError,
    NonConvexPolygonError,
    PitchPoint,
    RectYZ,
    Triangle2,
    circle_poly_intersection_area,
    convex_poly_intersection_area,
    foot_of_perpendicular,
    rect_intersection_area,
    triangle_area,
)

from oracles import (
    mc_circle_poly_area,
    mc_poly_poly_area,
    perpendicular_distance,
    rect_overlap_area,
    shoelace_area,
)


def tri(*pts) -> Triangle2:
    return Triangle2(*(PitchPoint(x, y) for x, y in pts))


class TestTriangleArea:
    def test_unit_right_triangle(self):
        assert triangle_area(tri((0, 0), (1, 0), (0, 1))) == 0.5

    def test_collinear_is_zero(self):
        assert triangle_area(tri((0, 0), (2, 0), (4, 0))) == 0.0

    def test_matches_shoelace_oracle(self):
        rng = random.Random(101)
        for _ in range(20):
            pts = [(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3)]
            assert triangle_area(tri(*pts)) == pytest.approx(shoelace_area(pts), abs=1e-12)


class TestConvexPolyIntersection:
    def test_self_intersection_is_idempotent(self):
        t = [(0.0, 0.0), (3.0, 0.0), (1.0, 2.0)]
        assert convex_poly_intersection_area(t, t) == pytest.approx(
            shoelace_area(t), abs=1e-12
        )

    def test_shifted_unit_squares(self):
        a = [(0, 0), (1, 0), (1, 1), (0, 1)]
        b = [(0.5, 0.5), (1.5, 0.5), (1.5, 1.5), (0.5, 1.5)]
        assert convex_poly_intersection_area(a, b) == pytest.approx(0.25, abs=1e-12)

    def test_disjoint_is_zero(self):
        a = [(0, 0), (1, 0), (0, 1)]
        b = [(5, 5), (6, 5), (5, 6)]
        assert convex_poly_intersection_area(a, b) == 0.0

    def test_degenerate_triangle_behaves_as_empty(self):
        line = [(0, 0), (2, 0), (4, 0)]
        square = [(0, -1), (5, -1), (5, 1), (0, 1)]
        assert convex_poly_intersection_area(line, square) == 0.0

    def test_rejects_non_convex(self):
        bowtie = [(0, 0), (2, 2), (2, 0), (0, 2)]
        t = [(0, 0), (1, 0), (0, 1)]
        with pytest.raises(NonConvexPolygonError):
            convex_poly_intersection_area(bowtie, t)
        with pytest.raises(NonConvexPolygonError):
            convex_poly_intersection_area(t, bowtie)

    def test_winding_direction_irrelevant(self):
        a = [(0, 0), (2, 0), (2, 2), (0, 2)]
        b = [(1, 1), (3, 1), (3, 3), (1, 3)]
        assert convex_poly_intersection_area(a, b[::-1]) == pytest.approx(1.0, abs=1e-12)
        assert convex_poly_intersection_area(a[::-1], b) == pytest.approx(1.0, abs=1e-12)

    def test_matches_monte_carlo(self, np_rng):
        rng = random.Random(7)
        for _ in range(25):
            a = [(rng.uniform(0, 2), rng.uniform(0, 2)) for _ in range(3)]
            b = [(rng.uniform(0, 2), rng.uniform(0, 2)) for _ in range(3)]
            analytic = convex_poly_intersection_area(a, b)
            estimate = mc_poly_poly_area(a, b, 200_000, np_rng)
            assert analytic == pytest.approx(estimate, abs=5e-3)

    def test_symmetry_and_bounds(self):
        rng = random.Random(11)
        for _ in range(50):
            a = [(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3)]
            b = [(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(3)]
            ab = convex_poly_intersection_area(a, b)
            ba = convex_poly_intersection_area(b, a)
            assert ab >= 0.0
            assert ab == pytest.approx(ba, abs=1e-9)
            assert ab <= min(shoelace_area(a), shoelace_area(b)) + 1e-9


class TestCirclePolyIntersection:
    def test_zero_radius(self):
        c = Circle2(PitchPoint(0.3, 0.3), 0.0)
        assert circle_poly_intersection_area(c, [(0, 0), (1, 0), (0, 1)]) == 0.0

    def test_circle_inside_large_triangle(self):
        c = Circle2(PitchPoint(0.0, 0.0), 1.5)
        big = [(-50, -50), (50, -50), (0, 80)]
        assert circle_poly_intersection_area(c, big) == pytest.approx(
            math.pi * 1.5**2, abs=1e-9
        )

    def test_polygon_inside_circle(self):
        c = Circle2(PitchPoint(0.0, 0.0), 100.0)
        t = [(0, 0), (3, 0), (0, 4)]
        assert circle_poly_intersection_area(c, t) == pytest.approx(6.0, abs=1e-9)

    def test_half_disk(self):
        # Circle centered on the edge of a huge square: exactly half covered.
        c = Circle2(PitchPoint(0.0, 0.0), 2.0)
        square = [(0, -100), (100, -100), (100, 100), (0, 100)]
        assert circle_poly_intersection_area(c, square) == pytest.approx(
            math.pi * 4.0 / 2.0, abs=1e-9
        )

    def test_degenerate_polygon_is_empty(self):
        c = Circle2(PitchPoint(0.0, 0.0), 2.0)
        assert circle_poly_intersection_area(c, [(0, 0), (1, 1), (2, 2)]) == 0.0

    def test_matches_monte_carlo(self, np_rng):
        rng = random.Random(13)
        for _ in range(25):
            poly = [(rng.uniform(0, 2), rng.uniform(0, 2)) for _ in range(3)]
            center = (rng.uniform(0, 2), rng.uniform(0, 2))
            radius = rng.uniform(0.05, 1.2)
            c = Circle2(PitchPoint(*center), radius)
            analytic = circle_poly_intersection_area(c, poly)
            estimate = mc_circle_poly_area(center, radius, poly, 200_000, np_rng)
            assert analytic == pytest.approx(estimate, abs=5e-3)

    def test_monotone_in_radius(self):
        rng = random.Random(17)
        poly = [(0, 0), (8, 0), (4, 6)]
        for _ in range(30):
            c = PitchPoint(rng.uniform(-2, 10), rng.uniform(-2, 8))
            radii = sorted(rng.uniform(0, 6) for _ in range(5))
            areas = [
                circle_poly_intersection_area(Circle2(c, r), poly) for r in radii
            ]
            assert all(a0 <= a1 + 1e-12 for a0, a1 in zip(areas, areas[1:]))

    def test_rigid_transform_invariance(self):
        rng = random.Random(19)
        for _ in range(20):
            poly = [(rng.uniform(0, 4), rng.uniform(0, 4)) for _ in range(3)]
            center = (rng.uniform(0, 4), rng.uniform(0, 4))
            radius = rng.uniform(0.1, 2.0)
            base = circle_poly_intersection_area(Circle2(PitchPoint(*center), radius), poly)
            theta = rng.uniform(0, 2 * math.pi)
            tx, ty = rng.uniform(-30, 30), rng.uniform(-30, 30)
            cos_t, sin_t = math.cos(theta), math.sin(theta)

            def move(p):
                return (
                    cos_t * p[0] - sin_t * p[1] + tx,
                    sin_t * p[0] + cos_t * p[1] + ty,
                )

            moved = circle_poly_intersection_area(
                Circle2(PitchPoint(*move(center)), radius), [move(p) for p in poly]
            )
            assert moved == pytest.approx(base, abs=1e-9)


class TestRectIntersection:
    def test_goal_mouth_self_overlap(self):
        mouth = RectYZ(-3.66, 3.66, 0.0, 2.44)
        assert rect_intersection_area(mouth, mouth) == pytest.approx(17.8608, abs=1e-12)

    def test_disjoint(self):
        assert rect_intersection_area(RectYZ(0, 1, 0, 1), RectYZ(2, 3, 0, 1)) == 0.0

    def test_matches_interval_oracle(self):
        rng = random.Random(23)
        for _ in range(100):
            a = sorted(rng.uniform(-5, 5) for _ in range(2))
            az = sorted(rng.uniform(-5, 5) for _ in range(2))
            b = sorted(rng.uniform(-5, 5) for _ in range(2))
            bz = sorted(rng.uniform(-5, 5) for _ in range(2))
            ra = RectYZ(a[0], a[1], az[0], az[1])
            rb = RectYZ(b[0], b[1], bz[0], bz[1])
            expected = rect_overlap_area(
                (a[0], a[1], az[0], az[1]), (b[0], b[1], bz[0], bz[1])
            )
            assert rect_intersection_area(ra, rb) == expected


class TestFootOfPerpendicular:
    def test_axis_aligned(self):
        d = foot_of_perpendicular(
            PitchPoint(1, 1), (PitchPoint(0, 0), PitchPoint(2, 0))
        )
        assert (d.x, d.y) == (1.0, 0.0)
        assert PitchPoint(1, 1).distance_to(d) == 1.0

    def test_point_on_line(self):
        a = PitchPoint(3, 0)
        d = foot_of_perpendicular(a, (PitchPoint(0, 0), PitchPoint(10, 0)))
        assert d == a

    def test_matches_cross_product_oracle(self):
        rng = random.Random(29)
        for _ in range(50):
            a = PitchPoint(rng.uniform(-10, 10), rng.uniform(-10, 10))
            p = (rng.uniform(-10, 10), rng.uniform(-10, 10))
            q = (rng.uniform(-10, 10), rng.uniform(-10, 10))
            if p == q:
                continue
            d = foot_of_perpendicular(a, (PitchPoint(*p), PitchPoint(*q)))
            assert a.distance_to(d) == pytest.approx(
                perpendicular_distance((a.x, a.y), p, q), abs=1e-12
            )

    def test_coincident_endpoints_rejected(self):
        with pytest.raises(DegenerateLineError):
            foot_of_perpendicular(
                PitchPoint(1, 1), (PitchPoint(2, 2), PitchPoint(2, 2))
            )


coords = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)


@settings(max_examples=100, deadline=None)
@given(pts=st.tuples(*[coords] * 6))
def test_triangle_area_never_negative(pts):
    assert triangle_area(tri(pts[0:2], pts[2:4], pts[4:6])) >= 0.0


@settings(max_examples=100, deadline=None)
@given(pts=st.tuples(*[coords] * 12))
def test_intersection_bounded_by_inputs(pts):
    a = [pts[0:2], pts[2:4], pts[4:6]]
    b = [pts[6:8], pts[8:10], pts[10:12]]
    area = convex_poly_intersection_area(a, b)
    assert area >= 0.0
    assert area <= min(shoelace_area(a), shoelace_area(b)) + 1e-6
