"""Chat-completions HTTP client for a remote model endpoint.

Speaks the de-facto chat JSON wire format: a messages array with roles,
image parts as URLs or data URLs, and a usage block in the response.
Credentials and endpoint come from PAVEMENT_API_KEY / PAVEMENT_API_BASE.
"""

from __future__ import annotations

import os
import time

import requests

from .core import AuthError, CompletionRequest, CompletionResult, RateLimited, TransportError

API_KEY_ENV = "PAVEMENT_API_KEY"
API_BASE_ENV = "PAVEMENT_API_BASE"
DEFAULT_API_BASE = "https://api.openai.com/v1"
DEFAULT_MODEL = "gpt-4o-mini"


class RemoteBackend:
    def __init__(
        self,
        api_key: str | None = None,
        api_base: str | None = None,
        default_model: str = DEFAULT_MODEL,
        timeout_s: float = 60.0,
        session: requests.Session | None = None,
    ):
        self.api_key = api_key if api_key is not None else os.environ.get(API_KEY_ENV)
        self.api_base = (
            api_base
            if api_base is not None
            else os.environ.get(API_BASE_ENV, DEFAULT_API_BASE)
        ).rstrip("/")
        self.default_model = default_model
        self.timeout_s = timeout_s
        self.session = session or requests.Session()

    def complete(self, request: CompletionRequest) -> CompletionResult:
        if not self.api_key:
            raise AuthError(f"no API key configured; set {API_KEY_ENV}")
        payload = self._payload(request)
        started = time.monotonic()
        try:
            resp = self.session.post(
                f"{self.api_base}/chat/completions",
                json=payload,
                headers={"Authorization": f"Bearer {self.api_key}"},
                timeout=self.timeout_s,
            )
        except requests.RequestException as exc:
            raise TransportError(f"request failed: {exc}") from exc
        latency = time.monotonic() - started

        if resp.status_code in (401, 403):
            raise AuthError(f"API key rejected (HTTP {resp.status_code})")
        if resp.status_code == 429:
            raise RateLimited("rate limited (HTTP 429)")
        if resp.status_code >= 500:
            raise TransportError(f"server error (HTTP {resp.status_code})")
        if resp.status_code != 200:
            raise TransportError(f"unexpected status (HTTP {resp.status_code}): {resp.text[:200]}")

        try:
            body = resp.json()
            text = body["choices"][0]["message"]["content"]
            usage = body.get("usage", {})
        except (ValueError, KeyError, IndexError, TypeError) as exc:
            raise TransportError(f"malformed response body: {exc}") from exc

        return CompletionResult(
            text=text,
            prompt_tokens=int(usage.get("prompt_tokens", 0)),
            completion_tokens=int(usage.get("completion_tokens", 0)),
            latency=latency,
        )

    def _payload(self, request: CompletionRequest) -> dict:
        content: list[dict] = []
        for part in request.user_content:
            if part.kind == "text":
                content.append({"type": "text", "text": part.value})
            else:
                content.append({"type": "image_url", "image_url": {"url": part.value}})
        payload = {
            "model": request.model_name or self.default_model,
            "temperature": request.temperature,
            "messages": [
                {"role": "system", "content": request.system_prompt},
                {"role": "user", "content": content},
            ],
        }
        if request.response_format == "JsonObject":
            payload["response_format"] = {"type": "json_object"}
        return payload
