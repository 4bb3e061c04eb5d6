from .engine import EmptyPlanError, LeafExecutor, UnknownLeafError, concat_under_sequence, tick
from .model import (
    BehaviorTree,
    Blackboard,
    BtNode,
    NodeKind,
    TickStatus,
    action,
    condition,
    fallback,
    parallel,
    sequence,
    walk,
)
from .palette import (
    NodePalette,
    PaletteEntry,
    ValidationReport,
    Violation,
    ViolationCode,
    load_palette,
    palette_from_json_dict,
    palette_to_json_dict,
    save_palette,
    validate_against_palette,
)
from .xmlio import MalformedXmlError, SchemaError, parse_bt_xml, serialize_bt

__all__ = [
    "BehaviorTree",
    "Blackboard",
    "BtNode",
    "EmptyPlanError",
    "LeafExecutor",
    "MalformedXmlError",
    "NodeKind",
    "NodePalette",
    "PaletteEntry",
    "SchemaError",
    "TickStatus",
    "UnknownLeafError",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "action",
    "concat_under_sequence",
    "condition",
    "fallback",
    "load_palette",
    "palette_from_json_dict",
    "palette_to_json_dict",
    "parallel",
    "parse_bt_xml",
    "save_palette",
    "sequence",
    "serialize_bt",
    "tick",
    "validate_against_palette",
    "walk",
]
