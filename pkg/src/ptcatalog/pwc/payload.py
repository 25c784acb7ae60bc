"""Mapping from the local dataset record to the external catalog's payload.

Every payload field originates from a local field; nothing is invented, and
fields absent locally are omitted. All Portuguese varieties collapse to the
single external language tag "portuguese", carried once.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from ptcatalog.core.model import Dataset, LanguageVariety, LinkKind

VARIETY_LANGUAGE_TAGS = {
    LanguageVariety.EUROPEAN_PT: "portuguese",
    LanguageVariety.BRAZILIAN_PT: "portuguese",
    LanguageVariety.AFRICAN_PT: "portuguese",
    LanguageVariety.OTHER_PT: "portuguese",
}


@dataclass(frozen=True)
class ExternalDatasetPayload:
    name: str
    full_name: str | None = None
    description: str | None = None
    url: str | None = None
    languages: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Serialized form with absent fields omitted."""
        doc: dict[str, Any] = {"name": self.name}
        if self.full_name is not None:
            doc["full_name"] = self.full_name
        if self.description is not None:
            doc["description"] = self.description
        if self.url is not None:
            doc["url"] = self.url
        doc["languages"] = list(self.languages)
        return doc


def to_external_payload(dataset: Dataset) -> ExternalDatasetPayload:
    """Deterministic field mapping; total on valid datasets."""
    homepage = next((l.url for l in dataset.links if l.kind is LinkKind.HOMEPAGE), None)
    languages = sorted({VARIETY_LANGUAGE_TAGS[v] for v in dataset.varieties})
    return ExternalDatasetPayload(
        name=dataset.english_name,
        full_name=dataset.native_name,
        description=dataset.description,
        url=homepage,
        languages=tuple(languages),
    )


def payload_hash(payload: ExternalDatasetPayload) -> str:
    """Stable digest of the serialized payload, used for change detection."""
    canonical = json.dumps(payload.to_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()
