"""Completion backend contract: request/result types, errors, tracing."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path
from typing import Mapping, Protocol, Sequence


class BackendError(Exception):
    """Base for completion backend failures."""


class AuthError(BackendError):
    """API key missing or rejected. Not retriable."""


class TransportError(BackendError):
    """Network or server-side failure. Retriable."""


class RateLimited(BackendError):
    """Throttled by the remote service. Retriable with backoff."""


class FixtureMiss(BackendError):
    """Scripted backend has no entry for the request; a test-authoring bug."""


@dataclass(frozen=True)
class ContentPart:
    """One piece of user content, either text or an image reference.

    For images, ``value`` is a data URL or plain URL; raw rasters are
    encoded by the caller before the request is built.
    """

    kind: str  # "text" | "image"
    value: str

    def __post_init__(self):
        if self.kind not in ("text", "image"):
            raise ValueError(f"content part kind must be text or image, got {self.kind!r}")


@dataclass(frozen=True)
class CompletionRequest:
    system_prompt: str
    user_content: tuple[ContentPart, ...]
    temperature: float = 0.0
    response_format: str = "FreeText"  # "FreeText" | "JsonObject"
    model_name: str = ""
    # Routing metadata (agent role, scene tag, ...). The scripted backend
    # keys fixtures off these; the remote backend ignores them.
    tags: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.user_content:
            raise ValueError("user_content must be non-empty")
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature {self.temperature} outside [0, 2]")
        if self.response_format not in ("FreeText", "JsonObject"):
            raise ValueError(f"unknown response_format {self.response_format!r}")

    def text_content(self) -> str:
        return "\n".join(p.value for p in self.user_content if p.kind == "text")


@dataclass(frozen=True)
class CompletionResult:
    text: str
    prompt_tokens: int
    completion_tokens: int
    latency: float | Decimal  # seconds; Decimal when pinned by a fixture

    def __post_init__(self):
        if self.prompt_tokens < 0 or self.completion_tokens < 0:
            raise ValueError("token counts must be >= 0")
        if self.latency < 0:
            raise ValueError("latency must be >= 0")

    @property
    def total_tokens(self) -> int:
        return self.prompt_tokens + self.completion_tokens


class Backend(Protocol):
    def complete(self, request: CompletionRequest) -> CompletionResult: ...


def text_request(
    system_prompt: str,
    user_text: str,
    *,
    response_format: str = "FreeText",
    model_name: str = "",
    tags: Mapping[str, str] | None = None,
    image: str | None = None,
) -> CompletionRequest:
    """Convenience builder for the common one-text-part request."""
    parts: list[ContentPart] = [ContentPart("text", user_text)]
    if image is not None:
        parts.append(ContentPart("image", image))
    return CompletionRequest(
        system_prompt=system_prompt,
        user_content=tuple(parts),
        response_format=response_format,
        model_name=model_name,
        tags=dict(tags or {}),
    )


class TraceWriter:
    """Appends request/response pairs to a JSONL file; thread-safe."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def record(self, request: CompletionRequest, result: CompletionResult) -> None:
        entry = {
            "request": {
                "system_prompt": request.system_prompt,
                "user_content": [{"kind": p.kind, "value": p.value} for p in request.user_content],
                "temperature": request.temperature,
                "response_format": request.response_format,
                "model_name": request.model_name,
                "tags": dict(request.tags),
            },
            "response": {
                "text": result.text,
                "prompt_tokens": result.prompt_tokens,
                "completion_tokens": result.completion_tokens,
                "latency_s": float(result.latency),
            },
        }
        line = json.dumps(entry, ensure_ascii=False)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")


class TracingBackend:
    """Wraps a backend and logs every exchange through a TraceWriter."""

    def __init__(self, inner: Backend, writer: TraceWriter):
        self.inner = inner
        self.writer = writer

    def complete(self, request: CompletionRequest) -> CompletionResult:
        result = self.inner.complete(request)
        self.writer.record(request, result)
        return result


class UsageRecorder:
    """Wraps a backend and records per-call usage; thread-safe.

    The orchestrator uses one recorder per pipeline invocation to
    aggregate token consumption and latency per agent role.
    """

    def __init__(self, inner: Backend):
        self.inner = inner
        self._lock = threading.Lock()
        self.calls: list[tuple[CompletionRequest, CompletionResult]] = []

    def complete(self, request: CompletionRequest) -> CompletionResult:
        result = self.inner.complete(request)
        with self._lock:
            self.calls.append((request, result))
        return result

    def calls_for_role(self, role: str) -> list[tuple[CompletionRequest, CompletionResult]]:
        with self._lock:
            return [(req, res) for req, res in self.calls if req.tags.get("role") == role]
