"""The rating decision tree.

A hand-authored five-rule tree over four boolean features, evaluated
top-down with first match winning. Small enough to audit by eye and to
test exhaustively.
"""

from __future__ import annotations

from datetime import datetime, timezone

from ptcatalog.core.model import Dataset, PreservationRating, RatingSource
from ptcatalog.rating.config import RatingConfig
from ptcatalog.rating.features import (
    PreservationFeatures,
    extract_features,
    recorded_probes,
)


def predict_rating(features: PreservationFeatures) -> PreservationRating:
    """Score a feature vector; total over all inputs, deterministic."""
    if features.has_hosted_copy and features.has_open_license:
        score = 5
    elif features.has_hosted_copy:
        score = 4
    elif features.all_links_alive and features.institution_hosted:
        score = 3
    elif features.all_links_alive:
        score = 2
    else:
        score = 1
    return PreservationRating(score=score, source=RatingSource.PREDICTED)


def rate_dataset_offline(
    dataset: Dataset,
    config: RatingConfig | None = None,
    now: datetime | None = None,
) -> tuple[PreservationFeatures, PreservationRating]:
    """Rate from recorded link states only (no probing; UNPROBED counts as DEAD)."""
    now = now or datetime.now(timezone.utc)
    features = extract_features(dataset, recorded_probes(dataset.links), now, config)
    return features, predict_rating(features)
