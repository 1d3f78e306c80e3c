"""Exact 2D intersection-area primitives.

Coordinate frame (normative for the whole package): the origin sits at the
center of the defended goal, x grows into the pitch (the goal line is x = 0)
and y runs along the goal line, so the left post is at +goal_width/2 and the
right post at -goal_width/2. All units are meters.

Goal-plane quantities (dive rectangles, shot targets) live in (y, z)
coordinates: y along the goal mouth, z above the ground.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import DegenerateLineError, NonConvexPolygonError

XY = tuple[float, float]


@dataclass(frozen=True, slots=True)
class PitchPoint:
    """Ground-plane location in meters."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"pitch point must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "PitchPoint") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> XY:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class GoalPoint:
    """Location in the goal plane: y along the mouth, z above ground."""

    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"goal point must be finite, got ({self.y}, {self.z})")

    def footprint(self) -> PitchPoint:
        """Ground-plane point directly below this goal-plane point."""
        return PitchPoint(0.0, self.y)


@dataclass(frozen=True, slots=True)
class PitchConfig:
    """Playing-surface dimensions. x in [0, length], y in [-width/2, width/2]."""

    length: float = 105.0
    width: float = 68.0
    margin: float = 5.0

    def contains(self, p: PitchPoint) -> bool:
        """True if p is on the pitch, allowing the configured margin."""
        return (
            -self.margin <= p.x <= self.length + self.margin
            and abs(p.y) <= self.width / 2 + self.margin
        )

    def clip(self, p: PitchPoint) -> PitchPoint:
        """Clamp a point to the strict pitch bounds (no margin)."""
        x = min(max(p.x, 0.0), self.length)
        y = min(max(p.y, -self.width / 2), self.width / 2)
        return p if (x == p.x and y == p.y) else PitchPoint(x, y)


@dataclass(frozen=True, slots=True)
class GoalConfig:
    """Goal-mouth dimensions; regulation 7.32 x 2.44 m by default."""

    width: float = 7.32
    height: float = 2.44

    @property
    def half_width(self) -> float:
        return self.width / 2

    @property
    def left_post(self) -> PitchPoint:
        return PitchPoint(0.0, self.half_width)

    @property
    def right_post(self) -> PitchPoint:
        return PitchPoint(0.0, -self.half_width)

    def mouth_rect(self) -> "RectYZ":
        return RectYZ(-self.half_width, self.half_width, 0.0, self.height)

    @property
    def mouth_area(self) -> float:
        return self.width * self.height

    def contains(self, gp: GoalPoint) -> bool:
        return abs(gp.y) <= self.half_width and 0.0 <= gp.z <= self.height


@dataclass(frozen=True, slots=True)
class Triangle2:
    """Ground-plane triangle. Degenerate (collinear) vertices are legal."""

    a: PitchPoint
    b: PitchPoint
    c: PitchPoint

    @property
    def vertices(self) -> tuple[PitchPoint, PitchPoint, PitchPoint]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class Circle2:
    center: PitchPoint
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius) or self.radius < 0:
            raise ValueError(f"circle radius must be finite and >= 0, got {self.radius}")


@dataclass(frozen=True, slots=True)
class RectYZ:
    """Axis-aligned rectangle in the goal plane."""

    y0: float
    y1: float
    z0: float
    z1: float

    def __post_init__(self):
        if self.y0 > self.y1 or self.z0 > self.z1:
            raise ValueError(
                f"rect intervals must be ordered, got y [{self.y0}, {self.y1}],"
                f" z [{self.z0}, {self.z1}]"
            )

    @property
    def width(self) -> float:
        return self.y1 - self.y0

    @property
    def height(self) -> float:
        return self.z1 - self.z0

    @property
    def area(self) -> float:
        return self.width * self.height


PointLike = Union[PitchPoint, Sequence[float]]
Polygon = Sequence[PointLike]


def _xy(p: PointLike) -> XY:
    if isinstance(p, PitchPoint):
        return (p.x, p.y)
    x, y = p
    return (float(x), float(y))


def _signed_area(pts: Sequence[XY]) -> float:
    total = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total / 2.0


def polygon_area(poly: Polygon) -> float:
    """Unsigned area of a simple polygon (shoelace)."""
    return abs(_signed_area([_xy(p) for p in poly]))


def triangle_area(t: Triangle2) -> float:
    """Unsigned area; 0 for collinear vertices."""
    return polygon_area(t.vertices)


def _is_convex(pts: Sequence[XY]) -> bool:
    # Zero cross products (collinear runs) are allowed; mixed signs are not.
    n = len(pts)
    scale = max(max(abs(x), abs(y)) for x, y in pts) or 1.0
    eps = 1e-12 * scale * scale
    sign = 0
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        cx, cy = pts[(i + 2) % n]
        cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        if abs(cross) <= eps:
            continue
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def _ccw(pts: list[XY]) -> list[XY]:
    return pts if _signed_area(pts) >= 0 else pts[::-1]


def _clip_convex(subject: list[XY], clip: list[XY]) -> list[XY]:
    """Sutherland-Hodgman clip of convex `subject` against CCW convex `clip`."""
    output = subject
    n = len(clip)
    for i in range(n):
        if not output:
            return []
        ax, ay = clip[i]
        bx, by = clip[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        input_pts = output
        output = []
        sx, sy = input_pts[-1]
        s_side = ex * (sy - ay) - ey * (sx - ax)
        for px, py in input_pts:
            p_side = ex * (py - ay) - ey * (px - ax)
            # side >= 0 means on or left of the directed clip edge (inside).
            if p_side >= 0:
                if s_side < 0:
                    t = s_side / (s_side - p_side)
                    output.append((sx + t * (px - sx), sy + t * (py - sy)))
                output.append((px, py))
            elif s_side >= 0:
                t = s_side / (s_side - p_side)
                output.append((sx + t * (px - sx), sy + t * (py - sy)))
            sx, sy, s_side = px, py, p_side
    return output


def convex_poly_intersection_area(p: Polygon, q: Polygon) -> float:
    """Area of the intersection of two convex polygons.

    Degenerate (zero-area) inputs behave as empty sets. Raises
    NonConvexPolygonError if either input is not convex.
    """
    pts_p = [_xy(v) for v in p]
    pts_q = [_xy(v) for v in q]
    if len(pts_p) < 3 or len(pts_q) < 3:
        raise NonConvexPolygonError("polygons need at least 3 vertices")
    if not _is_convex(pts_p):
        raise NonConvexPolygonError("first polygon is not convex")
    if not _is_convex(pts_q):
        raise NonConvexPolygonError("second polygon is not convex")
    if _signed_area(pts_p) == 0.0 or _signed_area(pts_q) == 0.0:
        return 0.0
    clipped = _clip_convex(_ccw(pts_p), _ccw(pts_q))
    if len(clipped) < 3:
        return 0.0
    return abs(_signed_area(clipped))


def _disk_sector_area(ux: float, uy: float, vx: float, vy: float, r: float) -> float:
    """Signed area of the circular sector swept from direction u to direction v."""
    angle = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
    return 0.5 * r * r * angle


def _disk_edge_area(ax: float, ay: float, bx: float, by: float, r: float) -> float:
    """Signed area of disk(origin, r) intersected with triangle (origin, a, b).

    Sign follows the orientation of (origin, a, b). Decomposes the chord a->b
    into the sub-segment inside the disk (triangle part) and the outside
    pieces (sector parts).
    """
    cross = ax * by - ay * bx
    if cross == 0.0:
        return 0.0
    dx, dy = bx - ax, by - ay
    dd = dx * dx + dy * dy
    ad = ax * dx + ay * dy
    aa = ax * ax + ay * ay
    disc = ad * ad - dd * (aa - r * r)
    if disc <= 0.0:
        return _disk_sector_area(ax, ay, bx, by, r)
    root = math.sqrt(disc)
    t_lo = (-ad - root) / dd
    t_hi = (-ad + root) / dd
    if t_hi <= 0.0 or t_lo >= 1.0:
        return _disk_sector_area(ax, ay, bx, by, r)
    t_lo = max(t_lo, 0.0)
    t_hi = min(t_hi, 1.0)
    px, py = ax + t_lo * dx, ay + t_lo * dy
    qx, qy = ax + t_hi * dx, ay + t_hi * dy
    area = 0.5 * (px * qy - py * qx)
    if t_lo > 0.0:
        area += _disk_sector_area(ax, ay, px, py, r)
    if t_hi < 1.0:
        area += _disk_sector_area(qx, qy, bx, by, r)
    return area


def circle_poly_intersection_area(c: Circle2, p: Polygon) -> float:
    """Exact area of circle ∩ convex polygon.

    Analytic per-edge decomposition about the circle center (no polygonal
    approximation of the circle). Raises NonConvexPolygonError for
    non-convex polygons; returns 0 for radius 0 or degenerate polygons.
    """
    pts = [_xy(v) for v in p]
    if len(pts) < 3:
        raise NonConvexPolygonError("polygon needs at least 3 vertices")
    if not _is_convex(pts):
        raise NonConvexPolygonError("polygon is not convex")
    if c.radius == 0.0 or _signed_area(pts) == 0.0:
        return 0.0
    cx, cy = c.center.x, c.center.y
    rel = [(x - cx, y - cy) for x, y in _ccw(pts)]
    total = 0.0
    n = len(rel)
    for i in range(n):
        ax, ay = rel[i]
        bx, by = rel[(i + 1) % n]
        total += _disk_edge_area(ax, ay, bx, by, c.radius)
    return abs(total)


def rect_intersection_area(a: RectYZ, b: RectYZ) -> float:
    """Overlap area of two axis-aligned goal-plane rectangles; 0 if disjoint."""
    dy = min(a.y1, b.y1) - max(a.y0, b.y0)
    dz = min(a.z1, b.z1) - max(a.z0, b.z0)
    if dy <= 0.0 or dz <= 0.0:
        return 0.0
    return dy * dz


def foot_of_perpendicular(
    a: PitchPoint, line: tuple[PitchPoint, PitchPoint]
) -> PitchPoint:
    """Orthogonal projection of `a` onto the infinite line through the two points."""
    p, q = line
    dx, dy = q.x - p.x, q.y - p.y
    dd = dx * dx + dy * dy
    if dd == 0.0:
        raise DegenerateLineError("line endpoints coincide")
    t = ((a.x - p.x) * dx + (a.y - p.y) * dy) / dd
    return PitchPoint(p.x + t * dx, p.y + t * dy)
