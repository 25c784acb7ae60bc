"""The hybrid storage-policy rule.

Well-preserved resources keep metadata only; poorly preserved ones are
flagged so a human makes a backup copy.
"""

from __future__ import annotations

from ptcatalog.core.model import PreservationRating, StoragePolicy

# Scores at or above this keep metadata only; below it a backup is required.
BACKUP_THRESHOLD = 3


def derive_storage_policy(rating: PreservationRating) -> StoragePolicy:
    """Map a preservation rating to its storage policy.

    Pure and total on scores 1..5; anything else is a domain error.
    """
    if not 1 <= rating.score <= 5:
        raise ValueError(f"preservation score out of range 1..5: {rating.score}")
    if rating.score >= BACKUP_THRESHOLD:
        return StoragePolicy.METADATA_ONLY
    return StoragePolicy.BACKUP_REQUIRED
