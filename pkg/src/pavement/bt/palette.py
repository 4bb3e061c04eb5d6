"""Leaf-node palette and tree validation against it.

The palette is the closed set of leaf node types a tree may use, the
machine-checkable form of the "predefined leaf nodes only" restriction.
Validation produces violation records rather than raising; an empty
report means the tree is structurally sound and palette-conformant.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .model import BehaviorTree, BtNode, NodeKind, walk


class ViolationCode(enum.Enum):
    UNKNOWN_LEAF = "UnknownLeaf"
    MISSING_PARAM = "MissingParam"
    UNKNOWN_PARAM = "UnknownParam"
    BAD_ARITY = "BadArity"
    BAD_THRESHOLD = "BadThreshold"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Violation:
    node_path: tuple[int, ...]
    code: ViolationCode
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"node_path": list(v.node_path), "code": v.code.value, "detail": v.detail}
                for v in self.violations
            ],
        }


@dataclass(frozen=True)
class PaletteEntry:
    kind: NodeKind
    required_params: tuple[str, ...] = ()
    optional_params: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in (NodeKind.ACTION, NodeKind.CONDITION):
            raise ValueError(f"palette entries must be Action or Condition, got {self.kind}")
        overlap = set(self.required_params) & set(self.optional_params)
        if overlap:
            raise ValueError(f"required/optional param lists overlap: {sorted(overlap)}")


@dataclass(frozen=True)
class NodePalette:
    entries: Mapping[str, PaletteEntry] = field(default_factory=dict)

    def __contains__(self, leaf_id: str) -> bool:
        return leaf_id in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def validate_against_palette(tree: BehaviorTree, palette: NodePalette) -> ValidationReport:
    """Check every node of the tree against structure rules and the palette.

    Composite nodes are checked for arity and thresholds only; leaves are
    checked for palette membership, kind agreement and param coverage.
    """
    violations: list[Violation] = []
    for path, node in walk(tree.root):
        if node.is_composite:
            violations.extend(_check_composite(path, node))
        else:
            violations.extend(_check_leaf(path, node, palette))
    return ValidationReport(tuple(violations))


def _check_composite(path, node: BtNode):
    if not node.children:
        yield Violation(path, ViolationCode.BAD_ARITY, f"{node.kind.value} has no children")
        return
    if node.kind is NodeKind.PARALLEL:
        n = len(node.children)
        for attr, value in (
            ("success_threshold", node.success_threshold),
            ("failure_threshold", node.failure_threshold),
        ):
            if value is not None and not 1 <= value <= n:
                yield Violation(
                    path, ViolationCode.BAD_THRESHOLD, f"{attr}={value} out of range 1..{n}"
                )


def _check_leaf(path, node: BtNode, palette: NodePalette):
    if node.children:
        yield Violation(path, ViolationCode.BAD_ARITY, f"{node.kind.value} leaf has children")
    if not node.id:
        yield Violation(path, ViolationCode.UNKNOWN_LEAF, "leaf id is empty")
        return
    entry = palette.entries.get(node.id)
    if entry is None:
        yield Violation(path, ViolationCode.UNKNOWN_LEAF, f"{node.id!r} is not in the palette")
        return
    if entry.kind is not node.kind:
        yield Violation(
            path,
            ViolationCode.UNKNOWN_LEAF,
            f"{node.id!r} is registered as {entry.kind.value}, used as {node.kind.value}",
        )
        return
    allowed = set(entry.required_params) | set(entry.optional_params)
    for name in entry.required_params:
        if name not in node.params:
            yield Violation(path, ViolationCode.MISSING_PARAM, f"{node.id!r} missing param {name!r}")
    for name in sorted(node.params):
        if name not in allowed:
            yield Violation(path, ViolationCode.UNKNOWN_PARAM, f"{node.id!r} has unknown param {name!r}")


def palette_to_json_dict(palette: NodePalette) -> dict:
    return {
        leaf_id: {
            "kind": entry.kind.value,
            "required_params": list(entry.required_params),
            "optional_params": list(entry.optional_params),
        }
        for leaf_id, entry in sorted(palette.entries.items())
    }


def palette_from_json_dict(data: Mapping) -> NodePalette:
    entries = {}
    for leaf_id, raw in data.items():
        entries[leaf_id] = PaletteEntry(
            kind=NodeKind(raw["kind"]),
            required_params=tuple(raw.get("required_params", ())),
            optional_params=tuple(raw.get("optional_params", ())),
        )
    return NodePalette(entries)


def load_palette(path: str | Path) -> NodePalette:
    with open(path, encoding="utf-8") as fh:
        return palette_from_json_dict(json.load(fh))


def save_palette(palette: NodePalette, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(palette_to_json_dict(palette), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
