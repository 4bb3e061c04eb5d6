"""Grid-based path planning with obstacle inflation and shortcut smoothing."""

from __future__ import annotations

import heapq
import math

from .geometry import Point, Pose, point_polygon_distance
from .world import DEFAULT_CONFIG, SimConfig, World

_SQRT2 = math.sqrt(2.0)
# fixed neighbor order keeps tie-breaking deterministic
_NEIGHBORS = (
    (1, 0, 1.0),
    (-1, 0, 1.0),
    (0, 1, 1.0),
    (0, -1, 1.0),
    (1, 1, _SQRT2),
    (1, -1, _SQRT2),
    (-1, 1, _SQRT2),
    (-1, -1, _SQRT2),
)


class NoPathError(Exception):
    """Goal unreachable under the configured inflation."""


def map_bounds(world: World, margin: float = 4.0) -> tuple[float, float, float, float]:
    """Bounding box of lanes, ego, goal and obstacles, expanded by margin."""
    xs = [world.ego.pose.x, world.goal.x]
    ys = [world.ego.pose.y, world.goal.y]
    for lane in world.lanes:
        for x, y in lane:
            xs.append(x)
            ys.append(y)
    for obstacle in world.obstacles:
        for x, y in obstacle.polygon:
            xs.append(x)
            ys.append(y)
    return min(xs) - margin, max(xs) + margin, min(ys) - margin, max(ys) + margin


def plan_path(
    world: World,
    frm: Pose,
    to: Pose,
    config: SimConfig = DEFAULT_CONFIG,
    avoid_obstacles: bool = True,
) -> list[Pose]:
    """Shortest grid path from frm to to, inflated, penalized near obstacles,
    then shortcut-smoothed.

    The first vertex equals frm's position and the last equals to's; every
    vertex keeps at least the inflation distance from every obstacle. A soft
    cost band (clearance_penalty_radius) pushes the path further out than
    the hard inflation bound so wide bodies track it safely.
    """
    xmin, xmax, ymin, ymax = map_bounds(world)
    if not (xmin <= frm.x <= xmax and ymin <= frm.y <= ymax):
        raise NoPathError(f"start {frm.point} outside map bounds")
    if not (xmin <= to.x <= xmax and ymin <= to.y <= ymax):
        raise NoPathError(f"goal {to.point} outside map bounds")

    res = config.grid_resolution
    nx = max(2, int(math.ceil((xmax - xmin) / res)))
    ny = max(2, int(math.ceil((ymax - ymin) / res)))

    def center(cell: tuple[int, int]) -> Point:
        return (xmin + (cell[0] + 0.5) * res, ymin + (cell[1] + 0.5) * res)

    def cell_of(pt: Point) -> tuple[int, int]:
        cx = min(nx - 1, max(0, int((pt[0] - xmin) / res)))
        cy = min(ny - 1, max(0, int((pt[1] - ymin) / res)))
        return (cx, cy)

    polygons = [o.polygon for o in world.obstacles] if avoid_obstacles else []

    def clearance(pt: Point) -> float:
        if not polygons:
            return math.inf
        return min(point_polygon_distance(pt, poly) for poly in polygons)

    def blocked(cell: tuple[int, int]) -> bool:
        return clearance(center(cell)) <= config.inflation

    def penalty(cell: tuple[int, int]) -> float:
        d = clearance(center(cell))
        band = config.clearance_penalty_radius - config.inflation
        if d >= config.clearance_penalty_radius or band <= 0:
            return 0.0
        return config.clearance_penalty_weight * (config.clearance_penalty_radius - d) / band

    start = cell_of(frm.point)
    goal = cell_of(to.point)
    if blocked(start):
        raise NoPathError("start position is inside the inflated obstacle region")
    if blocked(goal):
        raise NoPathError("goal position is inside the inflated obstacle region")

    cells = _astar(start, goal, nx, ny, blocked, penalty)
    if cells is None:
        raise NoPathError("no route between start and goal under inflation")

    points = [frm.point] + [center(c) for c in cells[1:-1]] + [to.point]
    if len(cells) == 1:
        points = [frm.point, to.point]
    # smooth at the soft clearance band: collapsing to the hard inflation
    # bound would hand the follower a corner-grazing line a wide body
    # cannot track; vertices that cannot be skipped stay as grid points
    smooth_bound = max(config.inflation, config.clearance_penalty_radius * 0.9)
    points = _shortcut(points, clearance, smooth_bound)
    return _to_poses(points, to.heading)


def _astar(start, goal, nx, ny, blocked, penalty):
    open_heap: list[tuple[float, int, tuple[int, int]]] = []
    counter = 0  # insertion order breaks heap ties deterministically
    g_cost = {start: 0.0}
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def h(cell):
        return math.hypot(cell[0] - goal[0], cell[1] - goal[1])

    heapq.heappush(open_heap, (h(start), counter, start))
    closed: set[tuple[int, int]] = set()
    while open_heap:
        _, _, current = heapq.heappop(open_heap)
        if current in closed:
            continue
        if current == goal:
            path = [current]
            while current in parent:
                current = parent[current]
                path.append(current)
            path.reverse()
            return path
        closed.add(current)
        cx, cy = current
        for dx, dy, base in _NEIGHBORS:
            nxt = (cx + dx, cy + dy)
            if not (0 <= nxt[0] < nx and 0 <= nxt[1] < ny) or nxt in closed:
                continue
            if blocked(nxt):
                continue
            cost = g_cost[current] + base * (1.0 + penalty(nxt))
            if cost < g_cost.get(nxt, math.inf):
                g_cost[nxt] = cost
                parent[nxt] = current
                counter += 1
                heapq.heappush(open_heap, (cost + h(nxt), counter, nxt))
    return None


def _shortcut(points: list[Point], clearance, inflation: float) -> list[Point]:
    """Greedy line-of-sight smoothing; samples must keep hard clearance."""
    if len(points) <= 2:
        return points
    out = [points[0]]
    i = 0
    while i < len(points) - 1:
        j = len(points) - 1
        while j > i + 1:
            if _segment_clear(points[i], points[j], clearance, inflation):
                break
            j -= 1
        out.append(points[j])
        i = j
    return out


def _segment_clear(a: Point, b: Point, clearance, inflation: float, step: float = 0.1) -> bool:
    length = math.hypot(b[0] - a[0], b[1] - a[1])
    n = max(1, int(length / step))
    for k in range(n + 1):
        t = k / n
        pt = (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)
        if clearance(pt) <= inflation:
            return False
    return True


def _to_poses(points: list[Point], final_heading: float) -> list[Pose]:
    poses = []
    for i, pt in enumerate(points):
        if i + 1 < len(points):
            nxt = points[i + 1]
            heading = math.atan2(nxt[1] - pt[1], nxt[0] - pt[0])
        else:
            heading = final_heading
        poses.append(Pose(pt[0], pt[1], heading))
    return poses


def path_length(path: list[Pose]) -> float:
    return sum(path[i].distance_to(path[i + 1]) for i in range(len(path) - 1))
