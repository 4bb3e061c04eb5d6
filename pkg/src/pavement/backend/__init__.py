from .core import (
    AuthError,
    Backend,
    BackendError,
    CompletionRequest,
    CompletionResult,
    ContentPart,
    FixtureMiss,
    RateLimited,
    TraceWriter,
    TracingBackend,
    TransportError,
    UsageRecorder,
    text_request,
)
from .remote import API_BASE_ENV, API_KEY_ENV, RemoteBackend
from .retry import ExhaustedRetries, RetryPolicy, with_retry
from .scripted import (
    FixtureEntry,
    ScriptedBackend,
    default_fixture_key,
    fixture_entries_from_dict,
    load_fixtures,
)

__all__ = [
    "API_BASE_ENV",
    "API_KEY_ENV",
    "AuthError",
    "Backend",
    "BackendError",
    "CompletionRequest",
    "CompletionResult",
    "ContentPart",
    "ExhaustedRetries",
    "FixtureEntry",
    "FixtureMiss",
    "RateLimited",
    "RemoteBackend",
    "RetryPolicy",
    "ScriptedBackend",
    "TraceWriter",
    "TracingBackend",
    "TransportError",
    "UsageRecorder",
    "default_fixture_key",
    "fixture_entries_from_dict",
    "load_fixtures",
    "text_request",
    "with_retry",
]
