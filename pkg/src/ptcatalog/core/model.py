"""Core value types of the catalog and their canonical JSON form.

Every type serializes to a JSON object with snake_case field names;
enumerations serialize as uppercase strings. The same form is used by the
service API, the persistence file, seed fixtures, and the sync payload
builder.

Construction is deliberately permissive for plain fields (an empty
english_name is representable); business rules live in
:mod:`ptcatalog.core.validation` so that a candidate record can be checked
and every violation reported at once. Enumerated fields are strict: unknown
tags are rejected at parse time with :class:`ParseError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any


class ParseError(ValueError):
    """A canonical-form document could not be decoded into a domain value."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name
        self.message = message


class LanguageVariety(str, Enum):
    """Regional variety of Portuguese tracked per resource."""

    EUROPEAN_PT = "EUROPEAN_PT"
    BRAZILIAN_PT = "BRAZILIAN_PT"
    AFRICAN_PT = "AFRICAN_PT"
    OTHER_PT = "OTHER_PT"


class LinkKind(str, Enum):
    HOMEPAGE = "HOMEPAGE"
    REPOSITORY = "REPOSITORY"
    PAPER = "PAPER"
    HOSTED_COPY = "HOSTED_COPY"


class Liveness(str, Enum):
    """Last known probe state of a link."""

    ALIVE = "ALIVE"
    DEAD = "DEAD"
    UNPROBED = "UNPROBED"


class RatingSource(str, Enum):
    """Whether a rating was supplied at submission or computed by the tree."""

    SUBMITTED = "SUBMITTED"
    PREDICTED = "PREDICTED"


class StoragePolicy(str, Enum):
    """Hybrid storage decision derived from the preservation rating."""

    METADATA_ONLY = "METADATA_ONLY"
    BACKUP_REQUIRED = "BACKUP_REQUIRED"


def _parse_enum(enum_cls: type, value: Any, field_name: str):
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(m.value for m in enum_cls)
        raise ParseError(field_name, f"unknown value {value!r} (expected one of: {allowed})") from None


@dataclass
class NLPTask:
    """A task-taxonomy entry referenced by datasets."""

    id: str
    name: str
    acronym: str
    papers_with_code_ids: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "name": self.name,
            "acronym": self.acronym,
            "papers_with_code_ids": list(self.papers_with_code_ids),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "NLPTask":
        if not isinstance(data, dict):
            raise ParseError("nlp_task", "expected a JSON object")
        return cls(
            id=str(data.get("id") or ""),
            name=str(data.get("name") or ""),
            acronym=str(data.get("acronym") or ""),
            papers_with_code_ids=[str(s) for s in data.get("papers_with_code_ids") or []],
        )


@dataclass
class ResourceLink:
    """A URL attached to a dataset, with its last known liveness."""

    kind: LinkKind
    url: str
    alive: Liveness = Liveness.UNPROBED

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "url": self.url, "alive": self.alive.value}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ResourceLink":
        if not isinstance(data, dict):
            raise ParseError("links", "expected a JSON object per link")
        alive = data.get("alive")
        return cls(
            kind=_parse_enum(LinkKind, data.get("kind"), "links.kind"),
            url=str(data.get("url") or ""),
            alive=Liveness.UNPROBED if alive is None else _parse_enum(Liveness, alive, "links.alive"),
        )


@dataclass
class PreservationRating:
    """Ordinal accessibility score, 1 (most at risk) to 5 (well preserved)."""

    score: int
    source: RatingSource = RatingSource.SUBMITTED

    def to_dict(self) -> dict[str, Any]:
        return {"score": self.score, "source": self.source.value}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PreservationRating":
        if not isinstance(data, dict):
            raise ParseError("preservation", "expected a JSON object")
        score = data.get("score")
        if not isinstance(score, int) or isinstance(score, bool):
            raise ParseError("preservation.score", "expected an integer")
        source = data.get("source")
        return cls(
            score=score,
            source=(
                RatingSource.SUBMITTED
                if source is None
                else _parse_enum(RatingSource, source, "preservation.source")
            ),
        )


@dataclass
class Dataset:
    """The central catalog record: one indexed NLP dataset."""

    id: str
    english_name: str
    native_name: str | None = None
    description: str | None = None
    task_ids: list[str] = field(default_factory=list)
    varieties: set[LanguageVariety] = field(default_factory=set)
    links: list[ResourceLink] = field(default_factory=list)
    license: str | None = None
    year: int | None = None
    preservation: PreservationRating | None = None
    policy: StoragePolicy | None = None

    def hosted_copy(self) -> ResourceLink | None:
        """The HOSTED_COPY link, if present (valid datasets have at most one)."""
        for link in self.links:
            if link.kind is LinkKind.HOSTED_COPY:
                return link
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "english_name": self.english_name,
            "native_name": self.native_name,
            "description": self.description,
            "task_ids": list(self.task_ids),
            "varieties": sorted(v.value for v in self.varieties),
            "links": [link.to_dict() for link in self.links],
            "license": self.license,
            "year": self.year,
            "preservation": self.preservation.to_dict() if self.preservation else None,
            "policy": self.policy.value if self.policy else None,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Dataset":
        if not isinstance(data, dict):
            raise ParseError("dataset", "expected a JSON object")
        year = data.get("year")
        if year is not None and (not isinstance(year, int) or isinstance(year, bool)):
            raise ParseError("year", "expected an integer")
        preservation = data.get("preservation")
        policy = data.get("policy")
        return cls(
            id=str(data.get("id") or ""),
            english_name=str(data.get("english_name") or ""),
            native_name=_opt_str(data.get("native_name")),
            description=_opt_str(data.get("description")),
            task_ids=[str(t) for t in data.get("task_ids") or []],
            varieties={
                _parse_enum(LanguageVariety, v, "varieties") for v in data.get("varieties") or []
            },
            links=[ResourceLink.from_dict(entry) for entry in data.get("links") or []],
            license=_opt_str(data.get("license")),
            year=year,
            preservation=PreservationRating.from_dict(preservation) if preservation else None,
            policy=None if policy is None else _parse_enum(StoragePolicy, policy, "policy"),
        )


@dataclass
class ApiToken:
    """Bearer credential gating all mutating registry operations."""

    token: str
    label: str
    issued_at: datetime
    revoked: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "token": self.token,
            "label": self.label,
            "issued_at": self.issued_at.astimezone(timezone.utc).isoformat(),
            "revoked": self.revoked,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ApiToken":
        if not isinstance(data, dict):
            raise ParseError("token", "expected a JSON object")
        try:
            issued_at = datetime.fromisoformat(str(data.get("issued_at")))
        except ValueError:
            raise ParseError("token.issued_at", "expected an ISO-8601 timestamp") from None
        return cls(
            token=str(data.get("token") or ""),
            label=str(data.get("label") or ""),
            issued_at=issued_at,
            revoked=bool(data.get("revoked", False)),
        )


def _opt_str(value: Any) -> str | None:
    return None if value is None else str(value)
