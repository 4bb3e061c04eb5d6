"""World state, kinematic bicycle stepping, scenario files."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from .geometry import (
    Polygon,
    Pose,
    normalize_angle,
    oriented_rectangle,
    polygon_is_simple,
    polygons_intersect,
)


class SimulatorError(Exception):
    """Invariant breach inside the simulator, distinct from behavioral failure."""


class CollisionError(SimulatorError):
    """Ego footprint intersected an obstacle; terminal."""


class ScenarioParseError(ValueError):
    pass


class ScenarioInvariantError(ValueError):
    pass


@dataclass(frozen=True)
class SimConfig:
    """Tunables for stepping, sensing, planning and rendering.

    Defaults are sized to the bundled two-lane map (60 m x 12 m).
    """

    dt: float = 0.05
    accel: float = 3.0  # m/s^2 commanded by throttle = +-1
    max_steer_rate: float = 2.0  # rad/s cap applied to steer commands
    grid_resolution: float = 0.25
    inflation: float = 0.5  # hard clearance radius for planning
    clearance_penalty_radius: float = 1.8  # soft cost band beyond inflation
    clearance_penalty_weight: float = 4.0
    goal_tolerance: float = 1.0
    footprint_length: float = 3.0
    footprint_width: float = 1.6
    footprint_rear: float = 0.5
    raster_width: int = 640
    raster_height: int = 480
    # follower's safety stop distance, measured from the rear-axle ray origin;
    # must cover the front overhang plus braking distance from cruise
    guard_range: float = 4.5
    guard_fov: float = 0.5  # rad, total forward cone for the guard
    guard_rays: int = 11
    cruise_speed: float = 2.0
    creep_speed: float = 0.3
    lookahead: float = 2.0
    sim_time_limit: float = 120.0  # simulated seconds, hard episode cap


DEFAULT_CONFIG = SimConfig()


@dataclass(frozen=True)
class VehicleState:
    pose: Pose
    wheelbase: float
    max_speed: float
    max_steer: float
    speed: float = 0.0
    steering_angle: float = 0.0

    def __post_init__(self):
        if self.wheelbase <= 0:
            raise ValueError("wheelbase must be > 0")
        if abs(self.speed) > self.max_speed + 1e-9:
            raise ValueError(f"|speed| {self.speed} exceeds max_speed {self.max_speed}")
        if abs(self.steering_angle) > self.max_steer + 1e-9:
            raise ValueError(f"|steering| {self.steering_angle} exceeds max_steer {self.max_steer}")


@dataclass(frozen=True)
class Obstacle:
    id: str
    kind: str
    polygon: Polygon


@dataclass(frozen=True)
class World:
    ego: VehicleState
    obstacles: tuple[Obstacle, ...]
    lanes: tuple[tuple[tuple[float, float], ...], ...]
    goal: Pose
    time: float = 0.0


@dataclass(frozen=True)
class Scenario:
    id: str
    world: World
    narrative: str


@dataclass(frozen=True)
class Control:
    throttle: float = 0.0  # -1..1
    steer_rate: float = 0.0  # rad/s

    def __post_init__(self):
        if not -1.0 <= self.throttle <= 1.0:
            raise ValueError(f"throttle {self.throttle} outside [-1, 1]")


def ego_footprint(world: World, config: SimConfig = DEFAULT_CONFIG) -> Polygon:
    return oriented_rectangle(
        world.ego.pose, config.footprint_length, config.footprint_width, config.footprint_rear
    )


def find_collision(world: World, config: SimConfig = DEFAULT_CONFIG) -> Obstacle | None:
    footprint = ego_footprint(world, config)
    for obstacle in world.obstacles:
        if polygons_intersect(footprint, obstacle.polygon):
            return obstacle
    return None


def step(world: World, control: Control, dt: float, config: SimConfig = DEFAULT_CONFIG) -> World:
    """Kinematic bicycle update followed by a collision check.

    Speed integrates throttle * accel and is clamped to +-max_speed;
    steering integrates steer_rate and is clamped to +-max_steer; the pose
    advances with the updated values and the heading is renormalized.
    """
    if not 0.0 < dt <= 0.1:
        raise ValueError(f"dt must be in (0, 0.1], got {dt}")
    ego = world.ego
    speed = _clamp(ego.speed + control.throttle * config.accel * dt, -ego.max_speed, ego.max_speed)
    steer_rate = _clamp(control.steer_rate, -config.max_steer_rate, config.max_steer_rate)
    steering = _clamp(ego.steering_angle + steer_rate * dt, -ego.max_steer, ego.max_steer)

    heading = ego.pose.heading
    x = ego.pose.x + speed * math.cos(heading) * dt
    y = ego.pose.y + speed * math.sin(heading) * dt
    heading = normalize_angle(heading + (speed / ego.wheelbase) * math.tan(steering) * dt)

    moved = replace(ego, pose=Pose(x, y, heading), speed=speed, steering_angle=steering)
    new_world = replace(world, ego=moved, time=world.time + dt)
    hit = find_collision(new_world, config)
    if hit is not None:
        raise CollisionError(
            f"ego footprint intersects obstacle {hit.id!r} ({hit.kind}) at t={new_world.time:.2f}s"
        )
    return new_world


def _clamp(v: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, v))


# ------------------------------------------------------------ scenario io


def scenario_from_dict(data: dict) -> Scenario:
    try:
        ego_raw = data["ego"]
        ego = VehicleState(
            pose=Pose(float(ego_raw["x"]), float(ego_raw["y"]), float(ego_raw.get("heading", 0.0))),
            wheelbase=float(ego_raw["wheelbase"]),
            max_speed=float(ego_raw["max_speed"]),
            max_steer=float(ego_raw["max_steer"]),
        )
        obstacles = tuple(
            Obstacle(
                id=str(o["id"]),
                kind=str(o.get("kind", "obstacle")),
                polygon=tuple((float(x), float(y)) for x, y in o["polygon"]),
            )
            for o in data.get("obstacles", [])
        )
        lanes = tuple(
            tuple((float(x), float(y)) for x, y in lane) for lane in data.get("lanes", [])
        )
        goal = Pose.from_json_dict(data["goal"])
        world = World(ego=ego, obstacles=obstacles, lanes=lanes, goal=goal)
        scenario = Scenario(id=str(data["id"]), world=world, narrative=str(data.get("narrative", "")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioParseError(f"bad scenario document: {exc}") from exc
    _check_invariants(scenario)
    return scenario


def _check_invariants(scenario: Scenario) -> None:
    if not scenario.id:
        raise ScenarioInvariantError("scenario id must be non-empty")
    for obstacle in scenario.world.obstacles:
        if len(obstacle.polygon) < 3:
            raise ScenarioInvariantError(f"obstacle {obstacle.id!r} polygon needs >= 3 vertices")
        if not polygon_is_simple(obstacle.polygon):
            raise ScenarioInvariantError(f"obstacle {obstacle.id!r} polygon is self-intersecting")
    if find_collision(scenario.world) is not None:
        raise ScenarioInvariantError("ego spawns inside an obstacle")


def scenario_to_dict(scenario: Scenario) -> dict:
    world = scenario.world
    return {
        "id": scenario.id,
        "ego": {
            "x": world.ego.pose.x,
            "y": world.ego.pose.y,
            "heading": world.ego.pose.heading,
            "wheelbase": world.ego.wheelbase,
            "max_speed": world.ego.max_speed,
            "max_steer": world.ego.max_steer,
        },
        "obstacles": [
            {"id": o.id, "kind": o.kind, "polygon": [[x, y] for x, y in o.polygon]}
            for o in world.obstacles
        ],
        "lanes": [[[x, y] for x, y in lane] for lane in world.lanes],
        "goal": world.goal.to_json_dict(),
        "narrative": scenario.narrative,
    }


def load_scenario(path: str | Path) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ScenarioParseError(f"cannot read scenario file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(f"scenario file is not valid JSON: {exc}") from exc
    return scenario_from_dict(data)


def save_scenario(scenario: Scenario, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(scenario_to_dict(scenario), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
