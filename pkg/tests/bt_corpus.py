"""Hand-written XML corpus for round-trip testing, 50 documents.

Deliberately messy: mixed whitespace, attribute orders, Selector aliases,
XML declarations, comments, entity escapes, omitted Parallel thresholds.
Each entry must parse; canonical form is pinned separately for a few.
"""

CORPUS = [
    # 1
    '<BehaviorTree name="t"><Sequence><Action id="Stop"/></Sequence></BehaviorTree>',
    # 2
    '<BehaviorTree name="solo"><Action id="Stop"/></BehaviorTree>',
    # 3
    '<BehaviorTree name="cond"><Condition id="GoalReached" tolerance_m="1.0"/></BehaviorTree>',
    # 4
    """<BehaviorTree name="nav">
  <Sequence>
    <Action id="ComputePathToPose" goal_key="goal" path_key="path"/>
    <Action id="FollowPath" path_key="path"/>
  </Sequence>
</BehaviorTree>""",
    # 5 attribute order scrambled
    '<BehaviorTree name="scramble"><Action path_key="p" id="FollowPath" speed_mps="1.5"/></BehaviorTree>',
    # 6 Selector alias
    '<BehaviorTree name="sel"><Selector><Condition id="ObstacleAhead" range_m="5"/><Action id="Stop"/></Selector></BehaviorTree>',
    # 7
    """<?xml version="1.0"?>
<BehaviorTree name="decl">
  <Fallback>
    <Action id="BackUp" distance_m="2" speed_mps="1"/>
    <Action id="Stop"/>
  </Fallback>
</BehaviorTree>""",
    # 8 comment
    """<BehaviorTree name="commented">
  <!-- recovery branch -->
  <Sequence>
    <Action id="Spin" angle_rad="1.57"/>
  </Sequence>
</BehaviorTree>""",
    # 9 parallel, both thresholds
    '<BehaviorTree name="par"><Parallel success_threshold="2" failure_threshold="1"><Action id="a"/><Action id="b"/></Parallel></BehaviorTree>',
    # 10 parallel, thresholds omitted (defaults)
    '<BehaviorTree name="par_default"><Parallel><Action id="a"/><Action id="b"/><Action id="c"/></Parallel></BehaviorTree>',
    # 11 parallel, only success given
    '<BehaviorTree name="par_half"><Parallel success_threshold="1"><Action id="a"/><Action id="b"/></Parallel></BehaviorTree>',
    # 12 deep nesting
    """<BehaviorTree name="deep">
  <Sequence>
    <Fallback>
      <Sequence>
        <Condition id="ObstacleAhead" range_m="10"/>
        <Action id="Stop"/>
      </Sequence>
      <Action id="FollowPath" path_key="path"/>
    </Fallback>
    <Action id="Stop"/>
  </Sequence>
</BehaviorTree>""",
    # 13 entity escapes in values
    '<BehaviorTree name="esc"><Action id="Log" message="a &amp; b &lt; c &gt; d &quot;quoted&quot;"/></BehaviorTree>',
    # 14 tabs and odd spacing
    '<BehaviorTree\tname="tabs"  >\n\t<Sequence >\n\t\t<Action  id="Stop" />\n\t</Sequence>\n</BehaviorTree>',
    # 15
    '<BehaviorTree name="single_fb"><Fallback><Action id="Stop"/></Fallback></BehaviorTree>',
    # 16 unicode in attr
    '<BehaviorTree name="uni"><Action id="Say" text="déjà vu ✓"/></BehaviorTree>',
    # 17 numeric-ish name
    '<BehaviorTree name="42"><Action id="Stop"/></BehaviorTree>',
    # 18
    """<BehaviorTree name="wide">
  <Sequence>
    <Action id="a1"/><Action id="a2"/><Action id="a3"/><Action id="a4"/>
  </Sequence>
</BehaviorTree>""",
    # 19 condition-heavy
    """<BehaviorTree name="checks">
  <Sequence>
    <Condition id="GoalReached" tolerance_m="0.5"/>
    <Condition id="ObstacleAhead" range_m="3"/>
    <Action id="Stop"/>
  </Sequence>
</BehaviorTree>""",
    # 20 parallel of parallels
    """<BehaviorTree name="parpar">
  <Parallel success_threshold="1" failure_threshold="2">
    <Parallel><Action id="x"/></Parallel>
    <Sequence><Action id="y"/></Sequence>
  </Parallel>
</BehaviorTree>""",
    # 21..30: recovery-flavored trees
    """<BehaviorTree name="recovery_1">
  <Sequence>
    <Action id="BackUp" distance_m="2" speed_mps="1"/>
    <Action id="ComputePathToPose" goal_key="goal" path_key="recovery_path"/>
    <Action id="FollowPath" path_key="recovery_path"/>
  </Sequence>
</BehaviorTree>""",
    '<BehaviorTree name="recovery_2"><Sequence><Action id="Spin" angle_rad="-0.8"/><Action id="DriveArc" distance_m="4" steer_rad="0.3"/></Sequence></BehaviorTree>',
    """<BehaviorTree name="recovery_3">
  <Fallback>
    <Sequence>
      <Condition id="ObstacleAhead" range_m="8"/>
      <Action id="BackUp" distance_m="1.5" speed_mps="0.5"/>
    </Sequence>
    <Action id="FollowPath" path_key="path"/>
  </Fallback>
</BehaviorTree>""",
    '<BehaviorTree name="recovery_4"><Sequence><Action id="Stop"/><Action id="ComputePathToPose" path_key="p2" goal_key="goal"/></Sequence></BehaviorTree>',
    """<BehaviorTree name="recovery_5">
  <Sequence>
    <Fallback>
      <Condition id="GoalReached" tolerance_m="1"/>
      <Action id="FollowPath" path_key="path"/>
    </Fallback>
  </Sequence>
</BehaviorTree>""",
    '<BehaviorTree name="recovery_6"><Selector><Condition id="GoalReached" tolerance_m="1"/><Sequence><Action id="DriveArc" distance_m="2" steer_rad="-0.4"/><Action id="Stop"/></Sequence></Selector></BehaviorTree>',
    """<BehaviorTree name="recovery_7">
  <Parallel failure_threshold="1" success_threshold="2">
    <Condition id="ObstacleAhead" range_m="10"/>
    <Condition id="GoalReached" tolerance_m="2"/>
  </Parallel>
</BehaviorTree>""",
    '<BehaviorTree name="recovery_8"><Sequence><Action id="Spin" angle_rad="3.14159"/><Action id="FollowPath" path_key="path" speed_mps="2.0"/></Sequence></BehaviorTree>',
    '<BehaviorTree name="recovery_9"><Sequence><Action id="BackUp" speed_mps="1" distance_m="6"/><Action id="Stop"/></Sequence></BehaviorTree>',
    """<BehaviorTree name="recovery_10">
  <Sequence>
    <Action id="ComputePathToPose" goal_key="goal" path_key="path" avoid_obstacles="false"/>
    <Action id="FollowPath" path_key="path" stop_range_m="2.5"/>
  </Sequence>
</BehaviorTree>""",
    # 31..40: structural variety
    '<BehaviorTree name="v31"><Sequence><Sequence><Sequence><Action id="deep"/></Sequence></Sequence></Sequence></BehaviorTree>',
    '<BehaviorTree name="v32"><Fallback><Fallback><Action id="x"/></Fallback><Action id="y"/></Fallback></BehaviorTree>',
    """<BehaviorTree name="v33">
    <Parallel success_threshold="3" failure_threshold="3">
        <Action id="p1"/>
        <Action id="p2"/>
        <Action id="p3"/>
    </Parallel>
</BehaviorTree>""",
    '<BehaviorTree name="v34"><Sequence><Action id="only" k1="v1" k2="v2" k3="v3" k4="v4"/></Sequence></BehaviorTree>',
    '<BehaviorTree name="v35"><Sequence><Action k4="v4" k3="v3" k2="v2" k1="v1" id="only"/></Sequence></BehaviorTree>',
    '<BehaviorTree name="v36"><Condition id="lonely"/></BehaviorTree>',
    """<BehaviorTree name="v37"><Sequence>
<Action id="nl" note="line1&#10;line2"/>
</Sequence></BehaviorTree>""",
    '<BehaviorTree name="v38"><Sequence><Action id="sp" note="  padded  "/></Sequence></BehaviorTree>',
    '<BehaviorTree name="v39"><Selector><Selector><Selector><Action id="s"/></Selector></Selector></Selector></BehaviorTree>',
    """<?xml version="1.0" encoding="UTF-8"?>
<!-- leading comment -->
<BehaviorTree name="v40">
  <Sequence>
    <!-- inner comment -->
    <Action id="Stop"/>
  </Sequence>
</BehaviorTree>""",
    # 41..50: mixed realistic
    """<BehaviorTree name="patrol">
  <Sequence>
    <Action id="ComputePathToPose" goal_key="wp1" path_key="leg1"/>
    <Action id="FollowPath" path_key="leg1"/>
    <Action id="ComputePathToPose" goal_key="wp2" path_key="leg2"/>
    <Action id="FollowPath" path_key="leg2"/>
  </Sequence>
</BehaviorTree>""",
    """<BehaviorTree name="guarded_drive">
  <Fallback>
    <Sequence>
      <Condition id="ObstacleAhead" range_m="4"/>
      <Action id="Stop"/>
    </Sequence>
    <Sequence>
      <Action id="FollowPath" path_key="path"/>
    </Sequence>
  </Fallback>
</BehaviorTree>""",
    '<BehaviorTree name="v43"><Parallel success_threshold="1" failure_threshold="4"><Action id="a"/><Action id="b"/><Action id="c"/><Action id="d"/></Parallel></BehaviorTree>',
    """<BehaviorTree name="v44">
  <Sequence>
    <Fallback>
      <Condition id="GoalReached" tolerance_m="0.5"/>
      <Sequence>
        <Action id="ComputePathToPose" goal_key="goal" path_key="path"/>
        <Action id="FollowPath" path_key="path"/>
      </Sequence>
    </Fallback>
    <Action id="Stop"/>
  </Sequence>
</BehaviorTree>""",
    '<BehaviorTree name="v45"><Sequence><Action id="A"/><Condition id="B"/><Action id="C"/><Condition id="D"/><Action id="E"/></Sequence></BehaviorTree>',
    """<BehaviorTree name="v46"><Fallback>
      <Action id="try_1" attempt="1"/>
      <Action id="try_2" attempt="2"/>
      <Action id="try_3" attempt="3"/>
</Fallback></BehaviorTree>""",
    '<BehaviorTree name="v47"><Sequence><Parallel success_threshold="2" failure_threshold="2"><Action id="m1"/><Action id="m2"/><Condition id="c1"/></Parallel><Action id="after"/></Sequence></BehaviorTree>',
    """<BehaviorTree name="v48">
  <Sequence>
    <Action id="Spin" angle_rad="0.5" speed_mps="0.8"/>
    <Action id="Spin" angle_rad="-0.5" speed_mps="0.8"/>
  </Sequence>
</BehaviorTree>""",
    '<BehaviorTree name="v49"><Fallback><Condition id="done"/><Action id="work" retries="3" timeout_s="12.5"/></Fallback></BehaviorTree>',
    """<BehaviorTree name="v50">
  <Sequence>
    <Condition id="ObstacleAhead" range_m="10" fov_rad="0.8" n_rays="15"/>
    <Action id="BackUp" distance_m="2" speed_mps="1"/>
    <Action id="ComputePathToPose" goal_key="goal" path_key="out"/>
    <Action id="FollowPath" path_key="out"/>
  </Sequence>
</BehaviorTree>""",
]

assert len(CORPUS) == 50
