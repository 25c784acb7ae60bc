"""Record validation.

Violations are accumulated (never fail-fast) so callers such as the web UI
can show every form error at once. A violation is data, not an exception.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterable
from urllib.parse import urlparse

from ptcatalog.core.model import Dataset, LinkKind, NLPTask
from ptcatalog.core.policy import derive_storage_policy

ACRONYM_RE = re.compile(r"^[A-Z0-9-]{1,12}$")


@dataclass(frozen=True)
class Violation:
    """One broken invariant, naming the offending field."""

    field: str
    message: str

    def to_dict(self) -> dict[str, Any]:
        return {"field": self.field, "message": self.message}


def is_absolute_http_url(url: str) -> bool:
    parsed = urlparse(url)
    return parsed.scheme in ("http", "https") and bool(parsed.netloc)


def validate_task(candidate: NLPTask) -> list[Violation]:
    """Check a task against its invariants; empty list means valid.

    Name uniqueness is a store-level property and is enforced at write time
    by the registry, not here.
    """
    violations = []
    if not candidate.name.strip():
        violations.append(Violation("name", "name must be a non-empty string"))
    if not ACRONYM_RE.match(candidate.acronym):
        violations.append(
            Violation("acronym", "acronym must be 1-12 characters from [A-Z0-9-]")
        )
    if len(set(candidate.papers_with_code_ids)) != len(candidate.papers_with_code_ids):
        violations.append(
            Violation("papers_with_code_ids", "external slugs must not contain duplicates")
        )
    return violations


def validate_dataset(candidate: Dataset, known_task_ids: Iterable[str]) -> list[Violation]:
    """Check a dataset against every invariant; returns all violations.

    Idempotent and side-effect-free: two calls on the same value yield
    identical results. english_name uniqueness across the store is enforced
    at write time by the registry.
    """
    known = set(known_task_ids)
    violations = []

    if not candidate.english_name.strip():
        violations.append(Violation("english_name", "english_name must be a non-empty string"))

    if not candidate.task_ids:
        violations.append(Violation("task_ids", "a dataset must reference at least one task"))
    for task_id in candidate.task_ids:
        if task_id not in known:
            violations.append(Violation("task_ids", f"unknown task id: {task_id!r}"))

    if not candidate.varieties:
        violations.append(
            Violation("varieties", "a dataset must declare at least one language variety")
        )

    hosted = 0
    for link in candidate.links:
        if not is_absolute_http_url(link.url):
            violations.append(
                Violation("links", f"not an absolute http(s) URL: {link.url!r}")
            )
        if link.kind is LinkKind.HOSTED_COPY:
            hosted += 1
    if hosted > 1:
        violations.append(Violation("links", "multiple hosted copies (at most one allowed)"))

    if candidate.year is not None and candidate.year < 1980:
        violations.append(Violation("year", "year must be an integer >= 1980"))

    if candidate.preservation is not None:
        if not 1 <= candidate.preservation.score <= 5:
            violations.append(
                Violation("preservation", "score must be an integer in 1..5")
            )
        elif candidate.policy is None:
            violations.append(
                Violation("policy", "policy is required when a preservation rating is present")
            )
        elif candidate.policy is not derive_storage_policy(candidate.preservation):
            violations.append(
                Violation("policy", "policy is inconsistent with the preservation rating")
            )
    elif candidate.policy is not None:
        violations.append(
            Violation("policy", "policy requires a preservation rating")
        )

    return violations
