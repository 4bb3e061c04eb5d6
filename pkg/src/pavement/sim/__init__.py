from importlib import resources
from pathlib import Path

from .geometry import Pose, normalize_angle
from .leaves import LEAF_SPECS, LeafRegistry, ParamParseError, SimSession, build_palette
from .pathplan import NoPathError, map_bounds, path_length, plan_path
from .sensors import raycast, render_raster, render_snapshot, structured_scene
from .world import (
    DEFAULT_CONFIG,
    CollisionError,
    Control,
    Obstacle,
    Scenario,
    ScenarioInvariantError,
    ScenarioParseError,
    SimConfig,
    SimulatorError,
    VehicleState,
    World,
    ego_footprint,
    find_collision,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
    step,
)


def bundled_scenario_path(name: str) -> Path:
    """Path to a packaged scenario file, e.g. "fire_truck" or "empty_road"."""
    ref = resources.files("pavement.sim") / "data" / f"{name}.json"
    return Path(str(ref))


def bundled_baseline_path() -> Path:
    return Path(str(resources.files("pavement.sim") / "data" / "baseline.xml"))


__all__ = [
    "DEFAULT_CONFIG",
    "LEAF_SPECS",
    "CollisionError",
    "Control",
    "LeafRegistry",
    "NoPathError",
    "Obstacle",
    "ParamParseError",
    "Pose",
    "Scenario",
    "ScenarioInvariantError",
    "ScenarioParseError",
    "SimConfig",
    "SimSession",
    "SimulatorError",
    "VehicleState",
    "World",
    "build_palette",
    "bundled_baseline_path",
    "bundled_scenario_path",
    "ego_footprint",
    "find_collision",
    "load_scenario",
    "map_bounds",
    "normalize_angle",
    "path_length",
    "plan_path",
    "raycast",
    "render_raster",
    "render_snapshot",
    "save_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "step",
    "structured_scene",
]
