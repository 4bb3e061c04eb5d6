"""Scene-assessment agent: snapshot in, criticality observation out."""

from __future__ import annotations

import base64
import io
import json
from typing import Any, Mapping

from ..backend import Backend, text_request
from .prompts import PromptTemplate, builtin_template, render_prompt
from .structured import StructuredOutputError, parse_structured_output
from .types import Observation, SceneSnapshot

ROLE = "descriptor"

REPLY_SCHEMA = {
    "isCritical": "boolean",
    "issueExplanation": "string",
    "sceneDescription": "string",
    "confidence": "number",
}


def describe(
    snapshot: SceneSnapshot,
    backend: Backend,
    *,
    template: PromptTemplate | None = None,
    scene_tag: str | None = None,
    model_name: str = "",
) -> Observation:
    """Assess the snapshot's criticality via the backend.

    Replies must be a JSON object with isCritical, issueExplanation,
    sceneDescription and confidence. One automatic reprompt is issued on
    a structured-output violation; a second violation raises.
    """
    template = template or builtin_template("descriptor")
    tag = scene_tag or snapshot.scene_tag
    system_prompt = render_prompt(template)
    user_text = _snapshot_payload(snapshot)
    image = _encode_image(snapshot)

    reply = _ask(backend, system_prompt, user_text, tag, model_name, image=image)
    try:
        return _to_observation(reply)
    except StructuredOutputError as first_error:
        retry_text = (
            f"{user_text}\n\nYour previous reply was rejected: {first_error}\n"
            "Reply again with exactly one JSON object matching the required keys."
        )
        reply = _ask(
            backend, system_prompt, retry_text, tag, model_name, image=image, attempt="reprompt"
        )
        return _to_observation(reply)


def _ask(backend, system_prompt, user_text, tag, model_name, image=None, attempt=None):
    tags = {"role": ROLE, "scene": tag}
    if attempt:
        tags["attempt"] = attempt
    request = text_request(
        system_prompt,
        user_text,
        response_format="JsonObject",
        model_name=model_name,
        tags=tags,
        image=image,
    )
    return backend.complete(request).text


def _to_observation(reply_text: str) -> Observation:
    data = parse_structured_output(reply_text, REPLY_SCHEMA)
    confidence = float(data["confidence"])
    if confidence > 1.0:  # prompt asks for 0-100%, store normalized
        confidence = confidence / 100.0
    try:
        return Observation(
            is_critical=data["isCritical"],
            confidence=confidence,
            issue_explanation=data["issueExplanation"],
            scene_description=data["sceneDescription"],
            reasoning_trace=str(data.get("reasoning", "")),
        )
    except ValueError as exc:
        raise StructuredOutputError(str(exc)) from exc


def _snapshot_payload(snapshot: SceneSnapshot) -> str:
    if snapshot.structured_scene is None:
        return "Assess the attached camera image."
    scene = _jsonable(snapshot.structured_scene)
    return "Structured scene:\n" + json.dumps(scene, indent=2, sort_keys=True)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _encode_image(snapshot: SceneSnapshot) -> str | None:
    if snapshot.image is None:
        return None
    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(snapshot.image).save(buf, format="PNG")
    return "data:image/png;base64," + base64.b64encode(buf.getvalue()).decode("ascii")
