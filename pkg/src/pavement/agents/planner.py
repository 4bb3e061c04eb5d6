"""Strategy agent: observation in, ordered plan of plain-English sub-goals out."""

from __future__ import annotations

from ..backend import Backend, text_request
from .prompts import PromptTemplate, builtin_template, render_prompt
from .structured import StructuredOutputError, parse_structured_output
from .types import Observation, Plan

ROLE = "planner"


class NotCritical(ValueError):
    """Planning requested for a scene the assessment marked non-critical."""


class EmptyPlanReply(ValueError):
    """The model returned a plan with zero sub-goals.

    Well-formed but empty, so it is not reprompted: deterministic decoding
    would only repeat it.
    """


def plan(
    observation: Observation,
    backend: Backend,
    *,
    scene_tag: str,
    template: PromptTemplate | None = None,
    model_name: str = "",
) -> Plan:
    """Build the recovery strategy for a critical observation."""
    if not observation.is_critical:
        raise NotCritical("refusing to plan for a non-critical observation")
    template = template or builtin_template("planner")
    system_prompt = render_prompt(template)
    user_text = (
        f"Issue: {observation.issue_explanation}\n\n"
        f"Scene: {observation.scene_description}"
    )

    reply = _ask(backend, system_prompt, user_text, scene_tag, model_name)
    try:
        return _to_plan(reply)
    except StructuredOutputError as first_error:
        retry_text = (
            f"{user_text}\n\nYour previous reply was rejected: {first_error}\n"
            'Reply again with exactly one JSON object of the form {"goals": ["...", ...]}.'
        )
        reply = _ask(backend, system_prompt, retry_text, scene_tag, model_name, attempt="reprompt")
        return _to_plan(reply)


def _ask(backend, system_prompt, user_text, tag, model_name, attempt=None):
    tags = {"role": ROLE, "scene": tag}
    if attempt:
        tags["attempt"] = attempt
    request = text_request(
        system_prompt, user_text, response_format="JsonObject", model_name=model_name, tags=tags
    )
    return backend.complete(request).text


def _to_plan(reply_text: str) -> Plan:
    data = parse_structured_output(reply_text, {"goals": "array"})
    texts: list[str] = []
    for item in data["goals"]:
        if isinstance(item, str):
            texts.append(item)
        elif isinstance(item, dict) and "text" in item:
            texts.append(str(item["text"]))
        else:
            raise StructuredOutputError(f"sub-goal entries must be strings, got {item!r}")
    if not texts:
        raise EmptyPlanReply("the reply contained zero sub-goals")
    if any(not t for t in texts):
        raise StructuredOutputError("sub-goal text must be non-empty")
    return Plan.from_texts(texts)
