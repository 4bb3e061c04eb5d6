"""Deterministic scripted backend: an offline double for the remote model.

Fixture entries are keyed by routing tags (role, scene, and optionally
goal index / repair attempt), not by prompt text, so template wording
changes never invalidate fixtures. Entries may pin latency so recorded
generation time is reproducible; token counts always come from the
fixture.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Callable, Mapping

from .core import CompletionRequest, CompletionResult, FixtureMiss

KeyFn = Callable[[CompletionRequest], str]


def default_fixture_key(request: CompletionRequest) -> str:
    """Build "role/scene[/goal][/attempt]" from the request's routing tags."""
    tags = request.tags
    role = tags.get("role")
    scene = tags.get("scene")
    if not role or not scene:
        raise FixtureMiss(
            f"request carries no role/scene routing tags (tags={dict(tags)!r}); "
            "scripted runs require both"
        )
    parts = [role, scene]
    if "goal" in tags:
        parts.append(str(tags["goal"]))
    if "attempt" in tags:
        parts.append(str(tags["attempt"]))
    return "/".join(parts)


@dataclass(frozen=True)
class FixtureEntry:
    reply: str
    prompt_tokens: int
    completion_tokens: int
    latency_s: Decimal | None = None  # pinned generation time, optional


class ScriptedBackend:
    """Pure function of the request: identical requests yield identical replies."""

    def __init__(self, entries: Mapping[str, FixtureEntry], key_fn: KeyFn = default_fixture_key):
        self.entries = dict(entries)
        self.key_fn = key_fn
        self._lock = threading.Lock()
        self.calls: list[CompletionRequest] = []

    def complete(self, request: CompletionRequest) -> CompletionResult:
        key = self.key_fn(request)
        started = time.monotonic()
        entry = self.entries.get(key)
        if entry is None:
            raise FixtureMiss(f"no fixture entry for key {key!r}")
        with self._lock:
            self.calls.append(request)
        latency = entry.latency_s if entry.latency_s is not None else time.monotonic() - started
        return CompletionResult(
            text=entry.reply,
            prompt_tokens=entry.prompt_tokens,
            completion_tokens=entry.completion_tokens,
            latency=latency,
        )

    def calls_for_role(self, role: str) -> list[CompletionRequest]:
        with self._lock:
            return [r for r in self.calls if r.tags.get("role") == role]


def fixture_entries_from_dict(data: Mapping) -> dict[str, FixtureEntry]:
    entries = {}
    for key, raw in data.items():
        latency = raw.get("latency_s")
        entries[key] = FixtureEntry(
            reply=raw["reply"],
            prompt_tokens=int(raw["prompt_tokens"]),
            completion_tokens=int(raw["completion_tokens"]),
            latency_s=latency if latency is None else Decimal(str(latency)),
        )
    return entries


def load_fixtures(path: str | Path) -> dict[str, FixtureEntry]:
    """Load a fixture file: a JSON map of key -> entry.

    Latencies are parsed as Decimal so per-agent sums are exact.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh, parse_float=Decimal)
    return fixture_entries_from_dict(data)
