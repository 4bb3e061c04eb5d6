"""Retry policy for transient backend failures."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .core import Backend, BackendError, CompletionRequest, CompletionResult, RateLimited, TransportError

RETRIABLE = (TransportError, RateLimited)


@dataclass(frozen=True)
class RetryPolicy:
    max_attempts: int = 3
    base_delay: float = 0.5  # seconds

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        if self.base_delay < 0:
            raise ValueError("base_delay must be >= 0")


class ExhaustedRetries(BackendError):
    def __init__(self, attempts: int, last_error: BackendError):
        self.attempts = attempts
        self.last_error = last_error
        super().__init__(f"gave up after {attempts} attempt(s): {last_error}")


def with_retry(
    backend: Backend,
    request: CompletionRequest,
    policy: RetryPolicy,
    sleep: Callable[[float], None] = time.sleep,
) -> CompletionResult:
    """Retry TransportError/RateLimited with exponential backoff.

    delay = base_delay * 2^attempt between tries; non-retriable errors
    propagate immediately.
    """
    last: BackendError | None = None
    for attempt in range(policy.max_attempts):
        try:
            return backend.complete(request)
        except RETRIABLE as exc:
            last = exc
            if attempt + 1 < policy.max_attempts:
                sleep(policy.base_delay * (2**attempt))
    assert last is not None
    raise ExhaustedRetries(policy.max_attempts, last)
