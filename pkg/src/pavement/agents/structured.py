"""Strict JSON parsing for structured model replies."""

from __future__ import annotations

import json
import re
from typing import Any, Mapping

_FENCE_RE = re.compile(r"```[a-zA-Z0-9_-]*\n(.*?)```", re.DOTALL)

# key -> expected kind; bool is checked before number since bool is an int subtype
KINDS = {
    "boolean": lambda v: isinstance(v, bool),
    "string": lambda v: isinstance(v, str),
    "number": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
    "array": lambda v: isinstance(v, list),
    "object": lambda v: isinstance(v, dict),
}


class StructuredOutputError(ValueError):
    """A model reply violated the structured-output contract."""


class NotJson(StructuredOutputError):
    pass


class MissingKey(StructuredOutputError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"required key {name!r} missing from reply")


class WrongKind(StructuredOutputError):
    def __init__(self, name: str, expected: str, got: Any):
        self.name = name
        super().__init__(f"key {name!r} must be {expected}, got {type(got).__name__}")


def strip_code_fences(text: str) -> str:
    """Return the first fenced block's content if present, else the text."""
    match = _FENCE_RE.search(text)
    return match.group(1) if match else text


def parse_structured_output(text: str, schema: Mapping[str, str]) -> dict:
    """Strict JSON parse with required keys of required kinds.

    Unknown keys are tolerated and retained. Markdown code fences are
    stripped first since models routinely wrap JSON in them.
    """
    body = strip_code_fences(text).strip()
    try:
        value = json.loads(body)
    except json.JSONDecodeError as exc:
        raise NotJson(f"reply is not valid JSON: {exc}") from exc
    if not isinstance(value, dict):
        raise NotJson(f"reply must be a JSON object, got {type(value).__name__}")
    for name, kind in schema.items():
        if name not in value:
            raise MissingKey(name)
        if not KINDS[kind](value[name]):
            raise WrongKind(name, kind, value[name])
    return value
