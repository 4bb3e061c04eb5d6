"""Tree-authoring agent: one sub-goal in, one palette-valid XML subtree out."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..backend import Backend, text_request
from ..bt import (
    BehaviorTree,
    MalformedXmlError,
    NodePalette,
    SchemaError,
    ValidationReport,
    palette_to_json_dict,
    parse_bt_xml,
    validate_against_palette,
)
from .prompts import PromptTemplate, builtin_template, render_prompt
from .structured import strip_code_fences
from .types import SubGoal

ROLE = "generator"


class GenerationInvalid(Exception):
    """The reply was still unparseable or palette-invalid after one repair round."""

    def __init__(self, goal: SubGoal, detail: str):
        self.goal = goal
        self.detail = detail
        super().__init__(f"sub-goal {goal.index} ({goal.text!r}): {detail}")


@dataclass(frozen=True)
class GenerationResult:
    tree: BehaviorTree
    repaired: bool  # True when the first reply failed and the repair reply was used


def generate(
    goal: SubGoal,
    palette: NodePalette,
    scene_context: str,
    backend: Backend,
    *,
    scene_tag: str,
    template: PromptTemplate | None = None,
    model_name: str = "",
) -> GenerationResult:
    """Synthesize a palette-valid subtree for one sub-goal.

    An invalid first reply triggers exactly one repair round-trip with the
    parse error or validation report embedded; a second invalid reply
    raises GenerationInvalid for operator intervention.
    """
    if not len(palette):
        raise ValueError("generation requires a non-empty palette")
    template = template or builtin_template("generator")
    system_prompt = render_prompt(
        template, {"palette": json.dumps(palette_to_json_dict(palette), indent=2)}
    )
    user_text = f"Sub-goal: {goal.text}\n\nScene context: {scene_context}"

    reply = _ask(backend, system_prompt, user_text, scene_tag, goal.index, model_name)
    tree, problem = _parse_and_validate(reply, goal, palette)
    if tree is not None:
        return GenerationResult(tree=tree, repaired=False)

    retry_text = (
        f"{user_text}\n\nYour previous reply was rejected:\n{problem}\n"
        "Reply again with one XML behavior tree using only the allowed leaf nodes."
    )
    reply = _ask(backend, system_prompt, retry_text, scene_tag, goal.index, model_name, attempt="repair")
    tree, problem = _parse_and_validate(reply, goal, palette)
    if tree is None:
        raise GenerationInvalid(goal, problem)
    return GenerationResult(tree=tree, repaired=True)


def _ask(backend, system_prompt, user_text, tag, goal_index, model_name, attempt=None):
    tags = {"role": ROLE, "scene": tag, "goal": str(goal_index)}
    if attempt:
        tags["attempt"] = attempt
    request = text_request(system_prompt, user_text, model_name=model_name, tags=tags)
    return backend.complete(request).text


def _parse_and_validate(reply_text, goal, palette):
    """Returns (tree, None) on success or (None, problem description)."""
    body = strip_code_fences(reply_text).strip()
    try:
        tree = _parse_reply(body, goal)
    except (MalformedXmlError, SchemaError) as exc:
        return None, f"XML error: {exc}"
    report = validate_against_palette(tree, palette)
    if not report.ok:
        return None, "palette violations:\n" + _format_report(report)
    return tree, None


def _parse_reply(body: str, goal: SubGoal) -> BehaviorTree:
    try:
        return parse_bt_xml(body)
    except SchemaError as exc:
        # bare node fragments are accepted and wrapped
        if "root element must be" in str(exc):
            return parse_bt_xml(f'<BehaviorTree name="goal_{goal.index}">{body}</BehaviorTree>')
        raise


def _format_report(report: ValidationReport) -> str:
    lines = []
    for v in report.violations:
        where = "/".join(str(i) for i in v.node_path) or "root"
        lines.append(f"- at {where}: {v.code.value}: {v.detail}")
    return "\n".join(lines)
