"""2D geometry primitives: poses, polygons, segment math."""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple[float, float]
Polygon = tuple[Point, ...]


def normalize_angle(a: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    return math.pi - ((math.pi - a) % (2.0 * math.pi))


@dataclass(frozen=True)
class Pose:
    x: float
    y: float
    heading: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "heading", normalize_angle(self.heading))

    @property
    def point(self) -> Point:
        return (self.x, self.y)

    def distance_to(self, other: "Pose | Point") -> float:
        ox, oy = (other.x, other.y) if isinstance(other, Pose) else other
        return math.hypot(self.x - ox, self.y - oy)

    def to_json_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "heading": self.heading}

    @classmethod
    def from_json_dict(cls, data) -> "Pose":
        return cls(float(data["x"]), float(data["y"]), float(data.get("heading", 0.0)))


def ray_segment_intersection(
    origin: Point, direction: Point, a: Point, b: Point
) -> float | None:
    """Distance along the ray to segment ab, or None if they do not meet.

    direction must be a unit vector.
    """
    ox, oy = origin
    dx, dy = direction
    ax, ay = a
    bx, by = b
    ex, ey = bx - ax, by - ay
    denom = dx * ey - dy * ex
    if abs(denom) < 1e-12:
        return None  # parallel (collinear overlap treated as miss)
    t = ((ax - ox) * ey - (ay - oy) * ex) / denom
    s = ((ax - ox) * dy - (ay - oy) * dx) / denom
    if t >= 0.0 and 0.0 <= s <= 1.0:
        return t
    return None


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper or touching intersection of segments p1p2 and q1q2."""

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if abs(v) < 1e-12:
            return 0
        return 1 if v > 0 else -1

    def on_segment(a, b, c):
        return (
            min(a[0], b[0]) - 1e-12 <= c[0] <= max(a[0], b[0]) + 1e-12
            and min(a[1], b[1]) - 1e-12 <= c[1] <= max(a[1], b[1]) + 1e-12
        )

    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_segment(p1, p2, q1):
        return True
    if o2 == 0 and on_segment(p1, p2, q2):
        return True
    if o3 == 0 and on_segment(q1, q2, p1):
        return True
    if o4 == 0 and on_segment(q1, q2, p2):
        return True
    return False


def point_in_polygon(pt: Point, poly: Polygon) -> bool:
    """Even-odd rule; boundary points count as inside for safety checks."""
    x, y = pt
    inside = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            x_cross = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < x_cross:
                inside = not inside
    return inside


def point_segment_distance(pt: Point, a: Point, b: Point) -> float:
    px, py = pt
    ax, ay = a
    bx, by = b
    ex, ey = bx - ax, by - ay
    length_sq = ex * ex + ey * ey
    if length_sq < 1e-18:
        return math.hypot(px - ax, py - ay)
    t = max(0.0, min(1.0, ((px - ax) * ex + (py - ay) * ey) / length_sq))
    cx, cy = ax + t * ex, ay + t * ey
    return math.hypot(px - cx, py - cy)


def point_polygon_distance(pt: Point, poly: Polygon) -> float:
    """0 inside, else distance to the nearest edge."""
    if point_in_polygon(pt, poly):
        return 0.0
    n = len(poly)
    return min(point_segment_distance(pt, poly[i], poly[(i + 1) % n]) for i in range(n))


def polygons_intersect(a: Polygon, b: Polygon) -> bool:
    """True when the polygons touch, overlap, or one contains the other."""
    na, nb = len(a), len(b)
    for i in range(na):
        for j in range(nb):
            if segments_intersect(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb]):
                return True
    return point_in_polygon(a[0], b) or point_in_polygon(b[0], a)


def polygon_is_simple(poly: Polygon) -> bool:
    """No crossings between non-adjacent edges."""
    n = len(poly)
    if n < 3:
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            if segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n]):
                return False
    return True


def polygon_centroid(poly: Polygon) -> Point:
    xs = sum(p[0] for p in poly) / len(poly)
    ys = sum(p[1] for p in poly) / len(poly)
    return (xs, ys)


def oriented_rectangle(center_pose: Pose, length: float, width: float, rear_offset: float) -> Polygon:
    """Rectangle footprint for a pose anchored at the rear axle.

    Extends rear_offset behind the pose and (length - rear_offset) ahead.
    """
    cos_h, sin_h = math.cos(center_pose.heading), math.sin(center_pose.heading)
    half_w = width / 2.0
    corners_body = (
        (-rear_offset, -half_w),
        (length - rear_offset, -half_w),
        (length - rear_offset, half_w),
        (-rear_offset, half_w),
    )
    return tuple(
        (center_pose.x + bx * cos_h - by * sin_h, center_pose.y + bx * sin_h + by * cos_h)
        for bx, by in corners_body
    )
