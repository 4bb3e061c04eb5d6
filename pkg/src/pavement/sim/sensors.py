"""Ray-cast sensing and snapshot rendering (structured scene + raster)."""

from __future__ import annotations

import math

import numpy as np

from ..agents.types import SceneSnapshot
from .geometry import Pose, polygon_centroid, ray_segment_intersection
from .world import DEFAULT_CONFIG, Scenario, SimConfig, World, ego_footprint

# raster palette, RGB
COLOR_BACKGROUND = (236, 236, 236)
COLOR_LANE = (160, 160, 160)
COLOR_OBSTACLE = (200, 60, 50)
COLOR_EGO = (40, 90, 200)
COLOR_GOAL = (40, 160, 70)


def raycast(world: World, n_rays: int, fov: float, max_range: float) -> list[float]:
    """Ranges for a symmetric fan of rays about the ego heading.

    Each entry is the distance to the nearest obstacle edge, capped at
    max_range. A single ray points straight along the heading.
    """
    if n_rays < 1:
        raise ValueError("n_rays must be >= 1")
    if max_range <= 0:
        raise ValueError("max_range must be > 0")
    origin = world.ego.pose.point
    heading = world.ego.pose.heading
    if n_rays == 1:
        angles = [heading]
    else:
        half = fov / 2.0
        angles = [heading - half + fov * i / (n_rays - 1) for i in range(n_rays)]

    ranges = []
    for angle in angles:
        direction = (math.cos(angle), math.sin(angle))
        best = max_range
        for obstacle in world.obstacles:
            poly = obstacle.polygon
            n = len(poly)
            for i in range(n):
                t = ray_segment_intersection(origin, direction, poly[i], poly[(i + 1) % n])
                if t is not None and t < best:
                    best = t
        ranges.append(best)
    return ranges


def structured_scene(world: World, narrative: str) -> dict:
    """Plain-data mirror of the world, the offline stand-in for pixels."""
    return {
        "narrative": narrative,
        "ego_pose": world.ego.pose.to_json_dict(),
        "obstacles": [
            {
                "kind": o.kind,
                "pose": {"x": polygon_centroid(o.polygon)[0], "y": polygon_centroid(o.polygon)[1], "heading": 0.0},
                "footprint": [[x, y] for x, y in o.polygon],
            }
            for o in world.obstacles
        ],
        "lanes": [[[x, y] for x, y in lane] for lane in world.lanes],
        "goal_pose": world.goal.to_json_dict(),
    }


def render_snapshot(
    world: World,
    scenario: Scenario,
    config: SimConfig = DEFAULT_CONFIG,
    rasterize: bool = True,
) -> SceneSnapshot:
    """Snapshot of this instant: structured scene plus optional top-down raster."""
    image = render_raster(world, config) if rasterize else None
    return SceneSnapshot(image=image, structured_scene=structured_scene(world, scenario.narrative))


def render_raster(world: World, config: SimConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Deterministic top-down RGB raster of the world."""
    w, h = config.raster_width, config.raster_height
    img = np.empty((h, w, 3), dtype=np.uint8)
    img[:, :] = COLOR_BACKGROUND

    xmin, xmax, ymin, ymax = _view_bounds(world)
    span_x, span_y = xmax - xmin, ymax - ymin
    scale = min((w - 20) / span_x, (h - 20) / span_y)

    def to_px(pt):
        px = 10 + (pt[0] - xmin) * scale
        py = h - (10 + (pt[1] - ymin) * scale)  # flip y so +y is up
        return px, py

    for lane in world.lanes:
        _draw_polyline(img, [to_px(p) for p in lane], COLOR_LANE, thickness=2)
    for obstacle in world.obstacles:
        _fill_polygon(img, [to_px(p) for p in obstacle.polygon], COLOR_OBSTACLE)
    _fill_polygon(img, [to_px(p) for p in ego_footprint(world, config)], COLOR_EGO)
    _draw_disc(img, to_px(world.goal.point), radius_px=max(3.0, 0.5 * scale), color=COLOR_GOAL)
    return img


def _view_bounds(world: World) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for lane in world.lanes:
        for x, y in lane:
            xs.append(x)
            ys.append(y)
    for obstacle in world.obstacles:
        for x, y in obstacle.polygon:
            xs.append(x)
            ys.append(y)
    xs += [world.ego.pose.x, world.goal.x]
    ys += [world.ego.pose.y, world.goal.y]
    margin = 3.0
    return min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin


def _fill_polygon(img: np.ndarray, pts, color) -> None:
    h, w, _ = img.shape
    xs = np.array([p[0] for p in pts])
    ys = np.array([p[1] for p in pts])
    x0 = max(0, int(np.floor(xs.min())))
    x1 = min(w - 1, int(np.ceil(xs.max())))
    y0 = max(0, int(np.floor(ys.min())))
    y1 = min(h - 1, int(np.ceil(ys.max())))
    if x1 < x0 or y1 < y0:
        return
    gx, gy = np.meshgrid(np.arange(x0, x1 + 1) + 0.5, np.arange(y0, y1 + 1) + 0.5)
    inside = np.zeros(gx.shape, dtype=bool)
    n = len(pts)
    for i in range(n):
        xa, ya = pts[i]
        xb, yb = pts[(i + 1) % n]
        crosses = (ya > gy) != (yb > gy)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = xa + (gy - ya) * (xb - xa) / (yb - ya)
        inside ^= crosses & (gx < x_cross)
    img[y0 : y1 + 1, x0 : x1 + 1][inside] = color


def _draw_polyline(img: np.ndarray, pts, color, thickness: int = 1) -> None:
    for a, b in zip(pts[:-1], pts[1:]):
        _draw_segment(img, a, b, color, thickness)


def _draw_segment(img: np.ndarray, a, b, color, thickness: int) -> None:
    h, w, _ = img.shape
    length = math.hypot(b[0] - a[0], b[1] - a[1])
    steps = max(2, int(length * 2))
    half = (thickness - 1) // 2
    for i in range(steps + 1):
        t = i / steps
        x = int(round(a[0] + (b[0] - a[0]) * t))
        y = int(round(a[1] + (b[1] - a[1]) * t))
        for dy in range(-half, half + 1):
            for dx in range(-half, half + 1):
                if 0 <= x + dx < w and 0 <= y + dy < h:
                    img[y + dy, x + dx] = color


def _draw_disc(img: np.ndarray, center, radius_px: float, color) -> None:
    h, w, _ = img.shape
    cx, cy = center
    x0 = max(0, int(cx - radius_px))
    x1 = min(w - 1, int(cx + radius_px) + 1)
    y0 = max(0, int(cy - radius_px))
    y1 = min(h - 1, int(cy + radius_px) + 1)
    if x1 < x0 or y1 < y0:
        return
    gx, gy = np.meshgrid(np.arange(x0, x1 + 1), np.arange(y0, y1 + 1))
    mask = (gx + 0.5 - cx) ** 2 + (gy + 0.5 - cy) ** 2 <= radius_px**2
    img[y0 : y1 + 1, x0 : x1 + 1][mask] = color
