from .descriptor import describe
from .generator import GenerationInvalid, GenerationResult, generate
from .planner import EmptyPlanReply, NotCritical, plan
from .prompts import (
    FewShot,
    PromptTemplate,
    Section,
    UnboundPlaceholder,
    builtin_template,
    load_template,
    parse_template,
    render_prompt,
)
from .structured import (
    MissingKey,
    NotJson,
    StructuredOutputError,
    WrongKind,
    parse_structured_output,
    strip_code_fences,
)
from .types import Observation, Plan, SceneSnapshot, SubGoal

__all__ = [
    "EmptyPlanReply",
    "FewShot",
    "GenerationInvalid",
    "GenerationResult",
    "MissingKey",
    "NotCritical",
    "NotJson",
    "Observation",
    "Plan",
    "PromptTemplate",
    "SceneSnapshot",
    "Section",
    "StructuredOutputError",
    "SubGoal",
    "UnboundPlaceholder",
    "WrongKind",
    "builtin_template",
    "describe",
    "generate",
    "load_template",
    "parse_structured_output",
    "parse_template",
    "plan",
    "render_prompt",
    "strip_code_fences",
]
