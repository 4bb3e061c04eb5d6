"""Executable leaf palette grounding behavior trees in the simulator.

The registry is the single source of truth for the palette: its metadata
table produces the NodePalette used to validate both baseline and
generated trees. Multi-tick actions keep per-invocation progress in the
blackboard under dunder keys derived from their node path.
"""

from __future__ import annotations

import math
from dataclasses import replace

from ..bt import Blackboard, BtNode, NodeKind, NodePalette, PaletteEntry, TickStatus, UnknownLeafError
from .geometry import Pose, normalize_angle
from .pathplan import NoPathError, plan_path
from .sensors import raycast
from .world import DEFAULT_CONFIG, Control, Scenario, SimConfig, World, step


class ParamParseError(ValueError):
    """A leaf parameter is missing or not parseable as its expected type."""


# leaf id -> (kind, required params, optional params)
LEAF_SPECS: dict[str, tuple[NodeKind, tuple[str, ...], tuple[str, ...]]] = {
    "ComputePathToPose": (NodeKind.ACTION, ("goal_key", "path_key"), ("avoid_obstacles",)),
    "FollowPath": (
        NodeKind.ACTION,
        ("path_key",),
        ("speed_mps", "lookahead_m", "goal_tolerance_m", "stop_range_m", "no_progress_s"),
    ),
    "BackUp": (NodeKind.ACTION, ("distance_m", "speed_mps"), ()),
    "Spin": (NodeKind.ACTION, ("angle_rad",), ("speed_mps",)),
    "DriveArc": (NodeKind.ACTION, ("distance_m", "steer_rad"), ("speed_mps",)),
    "Stop": (NodeKind.ACTION, (), ()),
    "ObstacleAhead": (NodeKind.CONDITION, ("range_m",), ("fov_rad", "n_rays")),
    "GoalReached": (NodeKind.CONDITION, ("tolerance_m",), ()),
}


def build_palette() -> NodePalette:
    return NodePalette(
        {
            leaf_id: PaletteEntry(kind=kind, required_params=req, optional_params=opt)
            for leaf_id, (kind, req, opt) in LEAF_SPECS.items()
        }
    )


class SimSession:
    """Mutable world handle owned by one tick loop.

    Leaves command controls during a tick; step() then integrates one dt
    with the pending control, defaulting to braking when nothing was
    commanded. Trajectory rows are (t, x, y, heading, speed).
    """

    def __init__(self, scenario: Scenario, config: SimConfig = DEFAULT_CONFIG):
        self.config = config
        self.world: World = scenario.world
        self.pending: Control | None = None
        self.trajectory: list[tuple[float, float, float, float, float]] = []
        self._record()

    def _record(self) -> None:
        ego = self.world.ego
        self.trajectory.append((self.world.time, ego.pose.x, ego.pose.y, ego.pose.heading, ego.speed))

    def set_control(self, throttle: float, steer_rate: float) -> None:
        self.pending = Control(throttle=throttle, steer_rate=steer_rate)

    def request_full_stop(self) -> None:
        """Immediate halt: zero speed and straighten command, desk-scale physics."""
        self.world = replace(self.world, ego=replace(self.world.ego, speed=0.0))
        self.pending = Control(0.0, 0.0)

    def brake_control(self) -> Control:
        speed = self.world.ego.speed
        dv = self.config.accel * self.config.dt
        if abs(speed) <= dv:
            # cancel residual speed exactly instead of oscillating around 0
            throttle = -speed / (self.config.accel * self.config.dt)
        else:
            throttle = -1.0 if speed > 0 else 1.0
        return Control(throttle=throttle, steer_rate=-_sign(self.world.ego.steering_angle))

    def step(self) -> None:
        control = self.pending if self.pending is not None else self.brake_control()
        self.world = step(self.world, control, self.config.dt, self.config)
        self.pending = None
        self._record()

    def distance_to_goal(self) -> float:
        return self.world.ego.pose.distance_to(self.world.goal)

    def throttle_for(self, target_speed: float) -> float:
        """Throttle that moves current speed toward target within one dt."""
        dv = self.config.accel * self.config.dt
        return _clamp((target_speed - self.world.ego.speed) / dv, -1.0, 1.0)

    def steer_rate_for(self, target_steer: float) -> float:
        dt = self.config.dt
        return _clamp(
            (target_steer - self.world.ego.steering_angle) / dt,
            -self.config.max_steer_rate,
            self.config.max_steer_rate,
        )


class LeafRegistry:
    """Resolves palette leaf ids to behaviors against one SimSession."""

    def __init__(self, session: SimSession):
        self.session = session
        self._handlers = {
            "ComputePathToPose": self._compute_path,
            "FollowPath": self._follow_path,
            "BackUp": self._back_up,
            "Spin": self._spin,
            "DriveArc": self._drive_arc,
            "Stop": self._stop,
            "ObstacleAhead": self._obstacle_ahead,
            "GoalReached": self._goal_reached,
        }

    def __call__(self, leaf: BtNode, blackboard: Blackboard, path: str) -> TickStatus:
        spec = LEAF_SPECS.get(leaf.id)
        if spec is None or leaf.id not in self._handlers:
            raise UnknownLeafError(leaf.id, path)
        if spec[0] is not leaf.kind:
            raise UnknownLeafError(leaf.id, path)
        return self._handlers[leaf.id](leaf.params, blackboard, path)

    # ------------------------------------------------------------ actions

    def _compute_path(self, params, bb, path) -> TickStatus:
        goal_key = _require(params, "goal_key")
        path_key = _require(params, "path_key")
        if path_key in bb:
            return TickStatus.SUCCESS  # plan once per key; replanning uses a fresh key
        if goal_key not in bb:
            raise ParamParseError(f"blackboard has no goal under key {goal_key!r}")
        goal = bb[goal_key]
        if not isinstance(goal, Pose):
            raise ParamParseError(f"blackboard slot {goal_key!r} does not hold a pose")
        avoid = _parse_bool(params.get("avoid_obstacles", "true"), "avoid_obstacles")
        try:
            route = plan_path(
                self.session.world, self.session.world.ego.pose, goal, self.session.config, avoid
            )
        except NoPathError:
            return TickStatus.FAILURE
        bb[path_key] = route
        return TickStatus.SUCCESS

    def _follow_path(self, params, bb, path) -> TickStatus:
        cfg = self.session.config
        path_key = _require(params, "path_key")
        if path_key not in bb:
            raise ParamParseError(f"blackboard has no path under key {path_key!r}")
        route = bb[path_key]
        if not route:
            return TickStatus.FAILURE
        cruise = _parse_float(params.get("speed_mps", str(cfg.cruise_speed)), "speed_mps")
        lookahead = _parse_float(params.get("lookahead_m", str(cfg.lookahead)), "lookahead_m")
        tolerance = _parse_float(params.get("goal_tolerance_m", "0.5"), "goal_tolerance_m")
        stop_range = _parse_float(params.get("stop_range_m", str(cfg.guard_range)), "stop_range_m")
        no_progress_s = _parse_float(params.get("no_progress_s", "0"), "no_progress_s")

        world = self.session.world
        ego = world.ego
        target = route[-1]
        remaining = ego.pose.distance_to(target)
        state = _state(bb, path)

        if remaining <= tolerance:
            _clear_state(bb, path)
            self.session.request_full_stop()
            return TickStatus.SUCCESS

        # stall-out failure, disabled unless the tree asks for it
        if no_progress_s > 0:
            best = state.get("best", math.inf)
            if remaining < best - 0.05:
                state["best"] = remaining
                state["best_t"] = world.time
            elif world.time - state.get("best_t", world.time) > no_progress_s:
                _clear_state(bb, path)
                return TickStatus.FAILURE

        # safety guard: hold the brake while something sits in the forward cone
        guard = min(raycast(world, cfg.guard_rays, cfg.guard_fov, max_range=stop_range + 1.0))
        if guard < stop_range:
            self.session.set_control(self.session.throttle_for(0.0), 0.0)
            return TickStatus.RUNNING

        # pure pursuit toward a lookahead point on the path
        idx = int(state.get("idx", 0))
        idx = _advance_index(route, ego.pose, idx)
        state["idx"] = idx
        chase = _lookahead_point(route, idx, ego.pose, lookahead)
        alpha = normalize_angle(
            math.atan2(chase.y - ego.pose.y, chase.x - ego.pose.x) - ego.pose.heading
        )
        curvature = 2.0 * math.sin(alpha) / max(lookahead, 1e-6)
        desired_steer = _clamp(math.atan(curvature * ego.wheelbase), -ego.max_steer, ego.max_steer)
        target_speed = _clamp(remaining, cfg.creep_speed, cruise)
        self.session.set_control(
            self.session.throttle_for(target_speed), self.session.steer_rate_for(desired_steer)
        )
        return TickStatus.RUNNING

    def _back_up(self, params, bb, path) -> TickStatus:
        distance = _parse_float(_require(params, "distance_m"), "distance_m")
        speed = abs(_parse_float(_require(params, "speed_mps"), "speed_mps"))
        world = self.session.world
        state = _state(bb, path)
        if state.get("done"):
            return TickStatus.SUCCESS  # stays complete under memory-less re-ticks
        if "sx" not in state:
            state["sx"], state["sy"] = world.ego.pose.x, world.ego.pose.y
        moved = math.hypot(world.ego.pose.x - state["sx"], world.ego.pose.y - state["sy"])
        if moved >= distance:
            _finish(state)
            self.session.request_full_stop()
            return TickStatus.SUCCESS
        self.session.set_control(
            self.session.throttle_for(-speed), self.session.steer_rate_for(0.0)
        )
        return TickStatus.RUNNING

    def _spin(self, params, bb, path) -> TickStatus:
        angle = _parse_float(_require(params, "angle_rad"), "angle_rad")
        speed = abs(_parse_float(params.get("speed_mps", "1.0"), "speed_mps"))
        world = self.session.world
        state = _state(bb, path)
        if state.get("done"):
            return TickStatus.SUCCESS
        if "last" not in state:
            state["last"] = world.ego.pose.heading
            state["turned"] = 0.0
        state["turned"] += normalize_angle(world.ego.pose.heading - state["last"])
        state["last"] = world.ego.pose.heading
        if abs(state["turned"]) >= abs(angle):
            _finish(state)
            self.session.request_full_stop()
            return TickStatus.SUCCESS
        steer = _sign(angle) * world.ego.max_steer
        self.session.set_control(self.session.throttle_for(speed), self.session.steer_rate_for(steer))
        return TickStatus.RUNNING

    def _drive_arc(self, params, bb, path) -> TickStatus:
        distance = _parse_float(_require(params, "distance_m"), "distance_m")
        steer = _parse_float(_require(params, "steer_rad"), "steer_rad")
        speed = abs(_parse_float(params.get("speed_mps", "1.0"), "speed_mps"))
        world = self.session.world
        state = _state(bb, path)
        if state.get("done"):
            return TickStatus.SUCCESS
        if "lx" not in state:
            state["lx"], state["ly"] = world.ego.pose.x, world.ego.pose.y
            state["traveled"] = 0.0
        state["traveled"] += math.hypot(world.ego.pose.x - state["lx"], world.ego.pose.y - state["ly"])
        state["lx"], state["ly"] = world.ego.pose.x, world.ego.pose.y
        if state["traveled"] >= distance:
            _finish(state)
            self.session.request_full_stop()
            return TickStatus.SUCCESS
        steer = _clamp(steer, -world.ego.max_steer, world.ego.max_steer)
        self.session.set_control(self.session.throttle_for(speed), self.session.steer_rate_for(steer))
        return TickStatus.RUNNING

    def _stop(self, params, bb, path) -> TickStatus:
        self.session.request_full_stop()
        return TickStatus.SUCCESS

    # --------------------------------------------------------- conditions

    def _obstacle_ahead(self, params, bb, path) -> TickStatus:
        range_m = _parse_float(_require(params, "range_m"), "range_m")
        fov = _parse_float(params.get("fov_rad", str(math.pi / 2)), "fov_rad")
        n_rays = int(_parse_float(params.get("n_rays", "21"), "n_rays"))
        ranges = raycast(self.session.world, n_rays, fov, max_range=range_m)
        return TickStatus.SUCCESS if min(ranges) < range_m else TickStatus.FAILURE

    def _goal_reached(self, params, bb, path) -> TickStatus:
        tolerance = _parse_float(_require(params, "tolerance_m"), "tolerance_m")
        ok = self.session.distance_to_goal() <= tolerance
        return TickStatus.SUCCESS if ok else TickStatus.FAILURE


# ------------------------------------------------------------- helpers


def _state(bb: Blackboard, path: str) -> dict:
    key = f"__state__:{path}"
    if key not in bb:
        bb[key] = {}
    return bb[key]


def _clear_state(bb: Blackboard, path: str) -> None:
    bb.pop(f"__state__:{path}", None)


def _finish(state: dict) -> None:
    """Latch a finite maneuver as complete for the rest of the episode.

    Memory-less composites re-tick every child each tick; without the
    latch a completed BackUp/Spin/DriveArc would restart indefinitely.
    """
    state.clear()
    state["done"] = True


def _require(params, name: str) -> str:
    if name not in params:
        raise ParamParseError(f"missing required param {name!r}")
    return params[name]


def _parse_float(raw: str, name: str) -> float:
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise ParamParseError(f"param {name!r} must be a number, got {raw!r}") from None


def _parse_bool(raw: str, name: str) -> bool:
    lowered = str(raw).strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ParamParseError(f"param {name!r} must be a boolean, got {raw!r}")


def _advance_index(route, pose: Pose, idx: int) -> int:
    best_idx = idx
    best_dist = pose.distance_to(route[idx])
    for j in range(idx + 1, len(route)):
        d = pose.distance_to(route[j])
        if d <= best_dist:
            best_dist = d
            best_idx = j
    return best_idx


def _lookahead_point(route, idx: int, pose: Pose, lookahead: float) -> Pose:
    acc = 0.0
    prev = route[idx]
    for j in range(idx + 1, len(route)):
        seg = prev.distance_to(route[j])
        if acc + seg >= lookahead:
            return route[j]
        acc += seg
        prev = route[j]
    return route[-1]


def _clamp(v: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, v))


def _sign(v: float) -> float:
    if v > 0:
        return 1.0
    if v < 0:
        return -1.0
    return 0.0
