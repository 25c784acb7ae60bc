"""Authenticated connection settings for the registry."""

from __future__ import annotations

from dataclasses import dataclass, field

import httpx


@dataclass
class AdminSession:
    """Registry address plus bearer credential.

    The token is redacted in repr/str so it never leaks into diagnostics or
    logs. An explicit http client can be injected for tests.
    """

    base_url: str
    bearer_token: str = ""
    http: httpx.Client | None = field(default=None, compare=False)

    def __post_init__(self):
        self.base_url = self.base_url.rstrip("/")

    def __repr__(self) -> str:
        shown = "***" if self.bearer_token else "<unset>"
        return f"AdminSession(base_url={self.base_url!r}, bearer_token={shown})"

    __str__ = __repr__

    @property
    def auth_headers(self) -> dict[str, str]:
        return {"Authorization": f"Bearer {self.bearer_token}"}
