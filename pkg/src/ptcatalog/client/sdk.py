"""The catalog client: task-filtered listings and dataset loading.

A dataset with a fetchable hosted copy loads as materialized rows; anything
else falls back to the metadata that describes it. Fetch problems downgrade
the result, they never raise.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from enum import Enum
from typing import Any, Union

import httpx

from ptcatalog.client.fetchers import HubFetcher
from ptcatalog.core.model import Dataset
from ptcatalog.errors import TransportError, raise_for_response

logger = logging.getLogger(__name__)

BASE_URL_ENV = "PTCATALOG_URL"


class FallbackReason(str, Enum):
    NO_HOSTED_COPY = "NO_HOSTED_COPY"
    FETCH_FAILED = "FETCH_FAILED"


@dataclass(frozen=True)
class MaterializedDataset:
    """Metadata plus the actual rows pulled from the hosting hub."""

    metadata: Dataset
    rows: list[dict[str, Any]]
    source_locator: str


@dataclass(frozen=True)
class MetadataOnly:
    """Metadata fallback when no hosted copy could be delivered."""

    metadata: Dataset
    reason: FallbackReason


LoadResult = Union[MaterializedDataset, MetadataOnly]


class CatalogClient:
    """Read-only access to a registry instance.

    Immutable after construction; safe to share across threads. Every call
    is one independent HTTP request.
    """

    def __init__(
        self,
        base_url: str | None = None,
        fetcher: HubFetcher | None = None,
        http: httpx.Client | None = None,
        timeout: float = 10.0,
    ):
        resolved = base_url or os.environ.get(BASE_URL_ENV)
        if not resolved:
            raise ValueError(
                f"no registry URL: pass base_url or set {BASE_URL_ENV}"
            )
        self._base_url = resolved.rstrip("/")
        self._fetcher = fetcher
        self._http = http or httpx.Client(timeout=timeout)

    def all_datasets(self, nlp_task: str | None = None) -> list[Dataset]:
        """All dataset metadata, optionally restricted to one task name.

        Order is the registry's deterministic ordering, unchanged.
        """
        params = {"task": nlp_task} if nlp_task is not None else None
        body = self._get("/api/datasets", params=params)
        return [Dataset.from_dict(doc) for doc in body]

    def load_dataset(self, english_name: str, fetcher: HubFetcher | None = None) -> LoadResult:
        """Load a dataset by its unique english name.

        Returns materialized rows when the hosted copy is fetchable, the
        bare metadata otherwise. Unknown names raise NotFoundError; that is
        a different situation from a known dataset without rows.
        """
        if not english_name:
            raise ValueError("english_name must be non-empty")
        fetcher = fetcher or self._fetcher
        metadata = Dataset.from_dict(self._get(f"/api/datasets/by-name/{english_name}"))

        hosted = metadata.hosted_copy()
        if hosted is None:
            return MetadataOnly(metadata, FallbackReason.NO_HOSTED_COPY)
        if fetcher is None:
            logger.warning("no fetcher configured; returning metadata for %s", english_name)
            return MetadataOnly(metadata, FallbackReason.FETCH_FAILED)
        try:
            rows = fetcher.fetch(hosted.url)
        except Exception as exc:  # any fetcher failure downgrades, never propagates
            logger.warning("hosted copy fetch failed for %s: %s", english_name, exc)
            return MetadataOnly(metadata, FallbackReason.FETCH_FAILED)
        return MaterializedDataset(metadata, rows, hosted.url)

    def _get(self, path: str, params: dict | None = None):
        url = self._base_url + path
        try:
            response = self._http.get(url, params=params)
        except httpx.HTTPError as exc:
            raise TransportError(url, exc) from exc
        raise_for_response(response)
        return response.json()
