import math

import pytest

from pavement.bt import (
    BehaviorTree,
    Blackboard,
    NodeKind,
    TickStatus,
    UnknownLeafError,
    action,
    condition,
    sequence,
    tick,
    validate_against_palette,
)
from pavement.sim import (
    LEAF_SPECS,
    LeafRegistry,
    ParamParseError,
    Pose,
    SimSession,
    build_palette,
    bundled_scenario_path,
    load_scenario,
    raycast,
)


@pytest.fixture
def empty_session():
    return SimSession(load_scenario(bundled_scenario_path("empty_road")))


@pytest.fixture
def truck_session():
    return SimSession(load_scenario(bundled_scenario_path("fire_truck")))


def seeded_blackboard(session):
    return Blackboard({"goal": session.world.goal})


def run_leaf(session, node, bb=None, max_ticks=4000):
    """Tick a single-leaf tree to terminal status, stepping the sim between ticks."""
    registry = LeafRegistry(session)
    tree = BehaviorTree(name="t", root=node)
    bb = bb if bb is not None else seeded_blackboard(session)
    ticks = 0
    while True:
        status = tick(tree, bb, registry)
        ticks += 1
        if status is not TickStatus.RUNNING:
            return status, ticks, bb
        session.step()
        assert ticks < max_ticks, "leaf did not terminate in budget"


def test_palette_matches_leaf_specs():
    palette = build_palette()
    assert set(palette.entries) == set(LEAF_SPECS)
    entry = palette.entries["FollowPath"]
    assert entry.kind is NodeKind.ACTION
    assert entry.required_params == ("path_key",)
    assert "stop_range_m" in entry.optional_params


def test_stop_succeeds_in_one_tick_and_zeroes_speed(empty_session):
    from dataclasses import replace

    empty_session.world = replace(
        empty_session.world, ego=replace(empty_session.world.ego, speed=2.0)
    )
    status, ticks, _ = run_leaf(empty_session, action("Stop"))
    assert status is TickStatus.SUCCESS
    assert ticks == 1
    assert empty_session.world.ego.speed == 0.0


def test_obstacle_ahead_in_fire_truck_start_pose(truck_session):
    # scenario geometry puts the truck face 8 m ahead; the raycast oracle agrees
    straight = raycast(truck_session.world, n_rays=1, fov=0.0, max_range=20.0)
    assert straight == [pytest.approx(8.0)]
    status, ticks, _ = run_leaf(truck_session, condition("ObstacleAhead", range_m="10"))
    assert status is TickStatus.SUCCESS
    assert ticks == 1


def test_obstacle_ahead_false_on_empty_road(empty_session):
    status, _, _ = run_leaf(empty_session, condition("ObstacleAhead", range_m="10"))
    assert status is TickStatus.FAILURE


def test_goal_reached_condition(empty_session):
    status, _, _ = run_leaf(empty_session, condition("GoalReached", tolerance_m="1.0"))
    assert status is TickStatus.FAILURE
    near = SimSession(load_scenario(bundled_scenario_path("empty_road")))
    from dataclasses import replace

    near.world = replace(near.world, ego=replace(near.world.ego, pose=Pose(24.8, -1.75, 0.0)))
    status, _, _ = run_leaf(near, condition("GoalReached", tolerance_m="1.0"))
    assert status is TickStatus.SUCCESS


def test_back_up_runs_then_succeeds_within_one_step(empty_session):
    start = empty_session.world.ego.pose
    status, ticks, _ = run_leaf(empty_session, action("BackUp", distance_m="2", speed_mps="1"))
    assert status is TickStatus.SUCCESS
    assert ticks > 1  # Running for the intervening ticks
    moved = empty_session.world.ego.pose.distance_to(start)
    # cumulative reverse displacement >= 2 m, within one integration step
    assert 2.0 <= moved <= 2.0 + 1.0 * empty_session.config.dt + 1e-9
    assert empty_session.world.ego.pose.x < start.x


def test_spin_changes_heading_by_requested_angle(empty_session):
    status, _, _ = run_leaf(empty_session, action("Spin", angle_rad="1.0"))
    assert status is TickStatus.SUCCESS
    assert empty_session.world.ego.pose.heading == pytest.approx(1.0, abs=0.1)


def test_spin_negative_angle_turns_clockwise(empty_session):
    status, _, _ = run_leaf(empty_session, action("Spin", angle_rad="-0.8"))
    assert status is TickStatus.SUCCESS
    assert empty_session.world.ego.pose.heading == pytest.approx(-0.8, abs=0.1)


def test_drive_arc_travels_requested_distance(empty_session):
    start = empty_session.world.ego.pose
    status, _, _ = run_leaf(empty_session, action("DriveArc", distance_m="3", steer_rad="0.2"))
    assert status is TickStatus.SUCCESS
    assert empty_session.world.ego.pose.distance_to(start) <= 3.2
    assert empty_session.world.ego.pose.heading > 0.05  # arced left


def test_compute_path_stores_and_reuses(empty_session):
    bb = seeded_blackboard(empty_session)
    registry = LeafRegistry(empty_session)
    node = action("ComputePathToPose", goal_key="goal", path_key="path")
    tree = BehaviorTree(name="t", root=node)
    assert tick(tree, bb, registry) is TickStatus.SUCCESS
    stored = bb["path"]
    assert stored[0].point == pytest.approx(empty_session.world.ego.pose.point)
    assert stored[-1].point == pytest.approx(empty_session.world.goal.point)
    # second tick reuses the stored path object
    assert tick(tree, bb, registry) is TickStatus.SUCCESS
    assert bb["path"] is stored


def test_compute_path_failure_when_goal_unreachable(truck_session):
    from dataclasses import replace

    # goal buried inside the truck footprint
    truck_session.world = replace(truck_session.world, goal=Pose(16.0, -1.8, 0.0))
    bb = seeded_blackboard(truck_session)
    registry = LeafRegistry(truck_session)
    tree = BehaviorTree(name="t", root=action("ComputePathToPose", goal_key="goal", path_key="p"))
    assert tick(tree, bb, registry) is TickStatus.FAILURE


def test_follow_path_converges_on_straight_line(empty_session):
    """20 m straight path terminates Success within the computable tick budget."""
    bb = seeded_blackboard(empty_session)
    registry = LeafRegistry(empty_session)
    tree = BehaviorTree(
        name="t",
        root=sequence(
            action("ComputePathToPose", goal_key="goal", path_key="path"),
            action("FollowPath", path_key="path"),
        ),
    )
    cfg = empty_session.config
    distance = empty_session.distance_to_goal()
    budget = int(2 * (distance / cfg.creep_speed) / cfg.dt)
    ticks = 0
    while True:
        status = tick(tree, bb, registry)
        ticks += 1
        assert ticks < budget
        if status is TickStatus.SUCCESS:
            break
        assert status is TickStatus.RUNNING
        empty_session.step()
    assert empty_session.distance_to_goal() < 1.0


def test_follow_path_guard_holds_before_obstacle(truck_session):
    """Prior-map path aims at the truck; the guard stops the car short of it."""
    bb = seeded_blackboard(truck_session)
    registry = LeafRegistry(truck_session)
    tree = BehaviorTree(
        name="t",
        root=sequence(
            action("ComputePathToPose", goal_key="goal", path_key="path", avoid_obstacles="false"),
            action("FollowPath", path_key="path"),
        ),
    )
    for _ in range(600):  # 30 simulated seconds
        status = tick(tree, bb, registry)
        assert status is TickStatus.RUNNING
        truck_session.step()
    # stalled: stationary, close to the truck face, no collision
    assert abs(truck_session.world.ego.speed) < 0.05
    front = raycast(truck_session.world, n_rays=1, fov=0.0, max_range=20.0)[0]
    assert front < truck_session.config.guard_range + 0.5


def test_follow_path_no_progress_failure(truck_session):
    bb = seeded_blackboard(truck_session)
    registry = LeafRegistry(truck_session)
    tree = BehaviorTree(
        name="t",
        root=sequence(
            action("ComputePathToPose", goal_key="goal", path_key="path", avoid_obstacles="false"),
            action("FollowPath", path_key="path", no_progress_s="3"),
        ),
    )
    status = TickStatus.RUNNING
    for _ in range(600):
        status = tick(tree, bb, registry)
        if status is not TickStatus.RUNNING:
            break
        truck_session.step()
    assert status is TickStatus.FAILURE


def test_unknown_leaf_and_kind_mismatch(empty_session):
    registry = LeafRegistry(empty_session)
    bb = seeded_blackboard(empty_session)
    with pytest.raises(UnknownLeafError):
        tick(BehaviorTree(name="t", root=action("Teleport")), bb, registry)
    # Stop is an Action; using it as a Condition must not resolve
    with pytest.raises(UnknownLeafError):
        tick(BehaviorTree(name="t", root=condition("Stop")), bb, registry)


def test_param_parse_errors(empty_session):
    registry = LeafRegistry(empty_session)
    bb = seeded_blackboard(empty_session)
    with pytest.raises(ParamParseError):
        tick(BehaviorTree(name="t", root=action("BackUp", distance_m="soon", speed_mps="1")), bb, registry)
    with pytest.raises(ParamParseError):
        tick(BehaviorTree(name="t", root=action("BackUp", speed_mps="1")), bb, registry)
    with pytest.raises(ParamParseError):
        tick(BehaviorTree(name="t", root=action("FollowPath", path_key="nope")), bb, registry)


def test_palette_soundness_empty_report_means_no_unknown_leaf(empty_session):
    """Trees that validate cleanly never raise UnknownLeaf against the registry."""
    palette = build_palette()
    tree = BehaviorTree(
        name="t",
        root=sequence(
            condition("GoalReached", tolerance_m="1"),
            action("Stop"),
        ),
    )
    assert validate_against_palette(tree, palette).ok
    registry = LeafRegistry(empty_session)
    tick(tree, seeded_blackboard(empty_session), registry)  # must not raise
