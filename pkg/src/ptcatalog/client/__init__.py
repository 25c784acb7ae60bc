"""Read-side client: list datasets by task, load with metadata fallback."""

from ptcatalog.client.fetchers import FetchError, HubFetcher, LocalDirectoryFetcher
from ptcatalog.client.sdk import (
    CatalogClient,
    FallbackReason,
    MaterializedDataset,
    MetadataOnly,
)

__all__ = [
    "CatalogClient",
    "FallbackReason",
    "FetchError",
    "HubFetcher",
    "LocalDirectoryFetcher",
    "MaterializedDataset",
    "MetadataOnly",
]
