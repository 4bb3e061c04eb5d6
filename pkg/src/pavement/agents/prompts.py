"""Prompt templates: markdown files with {placeholder} slots.

Template files follow a light convention shared by all agents: a
``# Role`` heading opens the role header, each ``## Title`` starts a
section, and an optional ``## Examples`` section holds few-shot pairs as
alternating ``### Input`` / ``### Output`` blocks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping

_PLACEHOLDER_RE = re.compile(r"\{([a-z_][a-z0-9_]*)\}")


class UnboundPlaceholder(KeyError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no binding for placeholder {{{name}}}")


@dataclass(frozen=True)
class FewShot:
    input_summary: str
    exemplar_output: str


@dataclass(frozen=True)
class Section:
    title: str
    body: str


@dataclass(frozen=True)
class PromptTemplate:
    role_header: str
    sections: tuple[Section, ...] = ()
    few_shots: tuple[FewShot, ...] = ()


def render_prompt(template: PromptTemplate, bindings: Mapping[str, str] | None = None) -> str:
    """Deterministic render: role header, sections in order, then few-shots.

    Placeholders of the form {name} in the role header and section bodies
    are substituted; few-shot blocks are appended verbatim so exemplar
    braces (JSON, XML) never collide with the placeholder syntax.
    """
    bindings = bindings or {}
    blocks = [_substitute(template.role_header, bindings)]
    for section in template.sections:
        blocks.append(f"## {section.title}\n{_substitute(section.body, bindings)}")
    if template.few_shots:
        shots = ["## Examples"]
        for shot in template.few_shots:
            shots.append(f"### Input\n{shot.input_summary}")
            shots.append(f"### Output\n{shot.exemplar_output}")
        blocks.append("\n\n".join(shots))
    return "\n\n".join(b.strip("\n") for b in blocks if b.strip()) + "\n"


def _substitute(text: str, bindings: Mapping[str, str]) -> str:
    def repl(match: re.Match) -> str:
        name = match.group(1)
        if name not in bindings:
            raise UnboundPlaceholder(name)
        return str(bindings[name])

    return _PLACEHOLDER_RE.sub(repl, text)


def parse_template(text: str) -> PromptTemplate:
    """Parse the markdown template convention into a PromptTemplate."""
    role_lines: list[str] = []
    sections: list[Section] = []
    few_shots: list[FewShot] = []

    current: list[str] | None = None
    current_title: str | None = None
    in_examples = False
    shot_kind: str | None = None
    pending_input: str | None = None

    def close_block():
        nonlocal current, current_title, pending_input, shot_kind
        if current is None:
            return
        body = "\n".join(current).strip("\n")
        if in_examples:
            if shot_kind == "input":
                pending_input = body
            elif shot_kind == "output":
                few_shots.append(FewShot(pending_input or "", body))
                pending_input = None
        elif current_title is None:
            role_lines.append(body)
        else:
            sections.append(Section(current_title, body))
        current = None

    for line in text.splitlines():
        if line.startswith("### ") and in_examples:
            close_block()
            shot_kind = line[4:].strip().lower()
            current = []
        elif line.startswith("## "):
            close_block()
            title = line[3:].strip()
            if title.lower() == "examples":
                in_examples = True
                current = None
            else:
                in_examples = False
                current_title = title
                current = []
        elif line.startswith("# "):
            close_block()
            in_examples = False
            current_title = None
            current = []
        else:
            if current is None:
                current = []
                current_title = None
            current.append(line)
    close_block()

    role_header = "\n\n".join(b for b in role_lines if b)
    return PromptTemplate(role_header=role_header, sections=tuple(sections), few_shots=tuple(few_shots))


def load_template(path: str | Path) -> PromptTemplate:
    return parse_template(Path(path).read_text(encoding="utf-8"))


def builtin_template(agent: str) -> PromptTemplate:
    """Load one of the packaged agent templates: descriptor, planner, generator."""
    ref = resources.files("pavement.agents") / "templates" / f"{agent}.md"
    return parse_template(ref.read_text(encoding="utf-8"))
