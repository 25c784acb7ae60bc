"""Store-level failures, translated to HTTP status codes by the app layer."""

from __future__ import annotations

from ptcatalog.core.validation import Violation


class StoreError(Exception):
    """Base class for registry failures."""


class AuthFailure(StoreError):
    """Missing, unknown, revoked, or otherwise invalid credential (401)."""


class NotFound(StoreError):
    """No record with the requested id or name (404)."""


class Conflict(StoreError):
    """Uniqueness, referential-integrity, or revision conflict (409)."""


class ValidationFailed(StoreError):
    """The candidate record breaks domain invariants (422)."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        detail = "; ".join(f"{v.field}: {v.message}" for v in violations)
        super().__init__(f"validation failed: {detail}")
