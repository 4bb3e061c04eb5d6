"""Tick execution engine with memory-less composite semantics.

Each tick re-traverses composites from their first child. Sequence fails
on the first failing child and short-circuits; Fallback succeeds on the
first succeeding child; Parallel ticks all children and votes against
its thresholds, with Failure winning when both thresholds are met in
the same tick (engine law, safety first).
"""

from __future__ import annotations

from typing import Callable

from .model import BehaviorTree, Blackboard, BtNode, NodeKind, TickStatus

# Executors resolve a leaf to behavior. `path` is the node's address,
# "<tree name>/<child index>/..." , stable across ticks.
LeafExecutor = Callable[[BtNode, Blackboard, str], TickStatus]


class UnknownLeafError(Exception):
    """The executor cannot resolve a leaf id; aborts the tick."""

    def __init__(self, leaf_id: str, path: str = ""):
        self.leaf_id = leaf_id
        self.path = path
        where = f" at {path}" if path else ""
        super().__init__(f"no executor for leaf {leaf_id!r}{where}")


class EmptyPlanError(Exception):
    """A plan with zero sub-goals cannot form a tree."""


def tick(tree: BehaviorTree, blackboard: Blackboard, executor: LeafExecutor) -> TickStatus:
    """Run one tick of the tree; leaves delegate to the executor."""
    return _tick_node(tree.root, blackboard, executor, tree.name)


def _tick_node(node: BtNode, bb: Blackboard, executor: LeafExecutor, path: str) -> TickStatus:
    if node.is_leaf:
        return executor(node, bb, path)

    if node.kind is NodeKind.SEQUENCE:
        for i, child in enumerate(node.children):
            status = _tick_node(child, bb, executor, f"{path}/{i}")
            if status is not TickStatus.SUCCESS:
                return status
        return TickStatus.SUCCESS

    if node.kind is NodeKind.FALLBACK:
        for i, child in enumerate(node.children):
            status = _tick_node(child, bb, executor, f"{path}/{i}")
            if status is not TickStatus.FAILURE:
                return status
        return TickStatus.FAILURE

    # Parallel: no short-circuit, every child is ticked
    statuses = [
        _tick_node(child, bb, executor, f"{path}/{i}")
        for i, child in enumerate(node.children)
    ]
    successes = sum(s is TickStatus.SUCCESS for s in statuses)
    failures = sum(s is TickStatus.FAILURE for s in statuses)
    st = node.success_threshold if node.success_threshold is not None else len(node.children)
    ft = node.failure_threshold if node.failure_threshold is not None else 1
    if failures >= ft:
        return TickStatus.FAILURE
    if successes >= st:
        return TickStatus.SUCCESS
    return TickStatus.RUNNING


def concat_under_sequence(subtrees: list[BehaviorTree], name: str) -> BehaviorTree:
    """Chain subtree roots, in order, under a single Sequence root."""
    if not subtrees:
        raise EmptyPlanError("cannot concatenate an empty list of subtrees")
    root = BtNode(NodeKind.SEQUENCE, children=tuple(t.root for t in subtrees))
    return BehaviorTree(name=name, root=root)
