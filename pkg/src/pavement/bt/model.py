"""Behavior-tree data model: tick status, nodes, trees, blackboard."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping


class TickStatus(enum.Enum):
    SUCCESS = "Success"
    FAILURE = "Failure"
    RUNNING = "Running"

    def __str__(self) -> str:
        return self.value


class NodeKind(enum.Enum):
    SEQUENCE = "Sequence"
    FALLBACK = "Fallback"
    PARALLEL = "Parallel"
    ACTION = "Action"
    CONDITION = "Condition"

    def __str__(self) -> str:
        return self.value


COMPOSITE_KINDS = frozenset({NodeKind.SEQUENCE, NodeKind.FALLBACK, NodeKind.PARALLEL})
LEAF_KINDS = frozenset({NodeKind.ACTION, NodeKind.CONDITION})


@dataclass(frozen=True, eq=True)
class BtNode:
    """One tree node.

    Composite kinds (Sequence, Fallback, Parallel) carry ordered children;
    leaf kinds (Action, Condition) carry an id and string params. Parallel
    nodes vote with success/failure thresholds. Instances are immutable and
    safe to share across threads.
    """

    kind: NodeKind
    id: str = ""
    params: Mapping[str, str] = field(default_factory=dict)
    children: tuple["BtNode", ...] = ()
    success_threshold: int | None = None
    failure_threshold: int | None = None

    # dicts are unhashable; nodes are compared structurally, never hashed
    __hash__ = None  # type: ignore[assignment]

    @property
    def is_leaf(self) -> bool:
        return self.kind in LEAF_KINDS

    @property
    def is_composite(self) -> bool:
        return self.kind in COMPOSITE_KINDS


def sequence(*children: BtNode) -> BtNode:
    _require_children("Sequence", children)
    return BtNode(NodeKind.SEQUENCE, children=tuple(children))


def fallback(*children: BtNode) -> BtNode:
    _require_children("Fallback", children)
    return BtNode(NodeKind.FALLBACK, children=tuple(children))


def parallel(
    children: tuple[BtNode, ...] | list[BtNode],
    success_threshold: int | None = None,
    failure_threshold: int | None = None,
) -> BtNode:
    """Parallel node; thresholds default to all-must-succeed / first-failure."""
    kids = tuple(children)
    _require_children("Parallel", kids)
    st = len(kids) if success_threshold is None else success_threshold
    ft = 1 if failure_threshold is None else failure_threshold
    for name, value in (("success_threshold", st), ("failure_threshold", ft)):
        if not 1 <= value <= len(kids):
            raise ValueError(f"Parallel {name}={value} out of range 1..{len(kids)}")
    return BtNode(NodeKind.PARALLEL, children=kids, success_threshold=st, failure_threshold=ft)


def action(leaf_id: str, **params: str) -> BtNode:
    _require_id("Action", leaf_id)
    return BtNode(NodeKind.ACTION, id=leaf_id, params=dict(params))


def condition(leaf_id: str, **params: str) -> BtNode:
    _require_id("Condition", leaf_id)
    return BtNode(NodeKind.CONDITION, id=leaf_id, params=dict(params))


def _require_children(kind: str, children) -> None:
    if not children:
        raise ValueError(f"{kind} node requires at least one child")


def _require_id(kind: str, leaf_id: str) -> None:
    if not leaf_id:
        raise ValueError(f"{kind} node requires a non-empty id")


@dataclass(frozen=True, eq=True)
class BehaviorTree:
    name: str
    root: BtNode

    __hash__ = None  # type: ignore[assignment]


def walk(node: BtNode, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], BtNode]]:
    """Preorder traversal yielding (child-index path from root, node)."""
    yield path, node
    for i, child in enumerate(node.children):
        yield from walk(child, path + (i,))


class Blackboard:
    """Key-value store shared by a tree's leaves during execution.

    Reads of absent keys raise KeyError so "missing" is distinct from any
    stored value, including empty ones. Owned by the tick loop; never
    shared across threads.
    """

    def __init__(self, initial: Mapping[str, Any] | None = None):
        self._slots: dict[str, Any] = dict(initial or {})

    def __contains__(self, key: str) -> bool:
        return key in self._slots

    def __getitem__(self, key: str) -> Any:
        return self._slots[key]

    def __setitem__(self, key: str, value: Any) -> None:
        self._slots[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        return self._slots.get(key, default)

    def pop(self, key: str, *default: Any) -> Any:
        return self._slots.pop(key, *default)

    def keys(self):
        return self._slots.keys()

    def __repr__(self) -> str:
        return f"Blackboard({self._slots!r})"
