"""Preservation-rating engine: feature extraction, link probing, rule tree."""

from ptcatalog.rating.config import RatingConfig
from ptcatalog.rating.features import (
    PreservationFeatures,
    assume_live_probes,
    extract_features,
    recorded_probes,
)
from ptcatalog.rating.probe import LinkProbeResult, probe_links
from ptcatalog.rating.tree import predict_rating, rate_dataset_offline

__all__ = [
    "LinkProbeResult",
    "PreservationFeatures",
    "RatingConfig",
    "assume_live_probes",
    "extract_features",
    "predict_rating",
    "probe_links",
    "rate_dataset_offline",
    "recorded_probes",
]
