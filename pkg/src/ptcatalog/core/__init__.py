"""Domain model, validation, and the storage-policy rule shared by every module."""

from ptcatalog.core.model import (
    ApiToken,
    Dataset,
    LanguageVariety,
    LinkKind,
    Liveness,
    NLPTask,
    ParseError,
    PreservationRating,
    RatingSource,
    ResourceLink,
    StoragePolicy,
)
from ptcatalog.core.policy import BACKUP_THRESHOLD, derive_storage_policy
from ptcatalog.core.validation import Violation, validate_dataset, validate_task

__all__ = [
    "ApiToken",
    "BACKUP_THRESHOLD",
    "Dataset",
    "LanguageVariety",
    "LinkKind",
    "Liveness",
    "NLPTask",
    "ParseError",
    "PreservationRating",
    "RatingSource",
    "ResourceLink",
    "StoragePolicy",
    "Violation",
    "derive_storage_policy",
    "validate_dataset",
    "validate_task",
]
