"""XML parsing and canonical serialization for behavior trees.

Canonical form: two-space indentation, one element per line, attribute
order id-first then remaining names sorted, Parallel thresholds always
explicit, trailing newline. ``parse_bt_xml(serialize_bt(t))`` is
structurally equal to ``t``; ``serialize_bt(parse_bt_xml(d))`` is the
canonical form of ``d``.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import quoteattr

from .model import COMPOSITE_KINDS, BehaviorTree, BtNode, NodeKind

ROOT_TAG = "BehaviorTree"

_KIND_BY_TAG = {
    "Sequence": NodeKind.SEQUENCE,
    "Fallback": NodeKind.FALLBACK,
    "Selector": NodeKind.FALLBACK,  # accepted on input, serialized as Fallback
    "Parallel": NodeKind.PARALLEL,
    "Action": NodeKind.ACTION,
    "Condition": NodeKind.CONDITION,
}


class MalformedXmlError(ValueError):
    """The document is not syntactically valid XML."""


class SchemaError(ValueError):
    """The document is valid XML but not a valid behavior tree."""


def parse_bt_xml(text: str) -> BehaviorTree:
    """Parse an XML document into a BehaviorTree.

    Child order matches document order; leaf attributes other than ``id``
    become params. Raises MalformedXmlError on syntax errors and
    SchemaError on structural ones.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise MalformedXmlError(f"not well-formed XML: {exc}") from exc

    if root.tag != ROOT_TAG:
        raise SchemaError(f"root element must be <{ROOT_TAG}>, got <{root.tag}>")
    name = root.attrib.get("name")
    if not name:
        raise SchemaError(f"<{ROOT_TAG}> element requires a non-empty name attribute")
    extra = set(root.attrib) - {"name"}
    if extra:
        raise SchemaError(f"unexpected attribute(s) on <{ROOT_TAG}>: {sorted(extra)}")
    _reject_text(root)

    children = list(root)
    if len(children) != 1:
        raise SchemaError(f"<{ROOT_TAG}> must contain exactly one node element, got {len(children)}")
    return BehaviorTree(name=name, root=_parse_node(children[0]))


def _parse_node(elem: ET.Element) -> BtNode:
    kind = _KIND_BY_TAG.get(elem.tag)
    if kind is None:
        raise SchemaError(f"unknown element kind <{elem.tag}>")
    _reject_text(elem)

    if kind in COMPOSITE_KINDS:
        kids = tuple(_parse_node(child) for child in elem)
        if not kids:
            raise SchemaError(f"<{elem.tag}> must have at least one child")
        if kind is NodeKind.PARALLEL:
            st = _parse_threshold(elem, "success_threshold", default=len(kids))
            ft = _parse_threshold(elem, "failure_threshold", default=1)
            for attr, value in (("success_threshold", st), ("failure_threshold", ft)):
                if not 1 <= value <= len(kids):
                    raise SchemaError(
                        f"<Parallel> {attr}={value} out of range 1..{len(kids)}"
                    )
            extra = set(elem.attrib) - {"success_threshold", "failure_threshold"}
            if extra:
                raise SchemaError(f"unexpected attribute(s) on <Parallel>: {sorted(extra)}")
            return BtNode(kind, children=kids, success_threshold=st, failure_threshold=ft)
        if elem.attrib:
            raise SchemaError(f"unexpected attribute(s) on <{elem.tag}>: {sorted(elem.attrib)}")
        return BtNode(kind, children=kids)

    # leaf
    if len(elem):
        raise SchemaError(f"<{elem.tag}> is a leaf and must not have children")
    leaf_id = elem.attrib.get("id")
    if not leaf_id:
        raise SchemaError(f"<{elem.tag}> requires a non-empty id attribute")
    params = {k: v for k, v in elem.attrib.items() if k != "id"}
    return BtNode(kind, id=leaf_id, params=params)


def _parse_threshold(elem: ET.Element, attr: str, default: int) -> int:
    raw = elem.attrib.get(attr)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SchemaError(f"<Parallel> {attr} must be an integer, got {raw!r}") from None


def _reject_text(elem: ET.Element) -> None:
    if elem.text and elem.text.strip():
        raise SchemaError(f"unexpected text content inside <{elem.tag}>")
    for child in elem:
        if child.tail and child.tail.strip():
            raise SchemaError(f"unexpected text content inside <{elem.tag}>")


def serialize_bt(tree: BehaviorTree) -> str:
    """Emit the canonical XML form of a well-formed tree."""
    lines = [f"<{ROOT_TAG} name={quoteattr(tree.name)}>"]
    _emit(tree.root, 1, lines)
    lines.append(f"</{ROOT_TAG}>")
    return "\n".join(lines) + "\n"


def _emit(node: BtNode, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    if node.is_leaf:
        attrs = [f"id={quoteattr(node.id)}"]
        attrs += [f"{k}={quoteattr(node.params[k])}" for k in sorted(node.params)]
        lines.append(f"{pad}<{node.kind.value} {' '.join(attrs)}/>")
        return
    tag = node.kind.value
    if node.kind is NodeKind.PARALLEL:
        st = node.success_threshold if node.success_threshold is not None else len(node.children)
        ft = node.failure_threshold if node.failure_threshold is not None else 1
        lines.append(
            f'{pad}<{tag} failure_threshold="{ft}" success_threshold="{st}">'
        )
    else:
        lines.append(f"{pad}<{tag}>")
    for child in node.children:
        _emit(child, depth + 1, lines)
    lines.append(f"{pad}</{tag}>")
