"""Typed errors shared by the read SDK, the admin library, and the sync client."""

from __future__ import annotations

from typing import Any

import httpx


class CatalogClientError(Exception):
    """Base class for client-side failures."""


class TransportError(CatalogClientError):
    """The endpoint could not be reached at all."""

    def __init__(self, endpoint: str, cause: Exception | None = None):
        super().__init__(f"registry unreachable: {endpoint}" + (f" ({cause})" if cause else ""))
        self.endpoint = endpoint


class ApiError(CatalogClientError):
    """The endpoint answered with an error status."""

    def __init__(self, status: int, detail: str):
        super().__init__(f"HTTP {status}: {detail}")
        self.status = status
        self.detail = detail


class AuthError(ApiError):
    pass


class NotFoundError(ApiError):
    pass


class ConflictError(ApiError):
    pass


class RemoteValidationError(ApiError):
    """A 422 carrying the server's violation list."""

    def __init__(self, status: int, detail: str, violations: list[dict[str, Any]]):
        super().__init__(status, detail)
        self.violations = violations


def raise_for_response(response: httpx.Response) -> None:
    """Translate an error response into the matching typed exception."""
    if response.status_code < 400:
        return
    try:
        body = response.json()
    except ValueError:
        body = {}
    detail = str(body.get("detail", response.text or response.reason_phrase))
    status = response.status_code
    if status == 401:
        raise AuthError(status, detail)
    if status == 404:
        raise NotFoundError(status, detail)
    if status == 409:
        raise ConflictError(status, detail)
    if status == 422:
        raise RemoteValidationError(status, detail, body.get("violations", []))
    raise ApiError(status, detail)
