"""Feature extraction from dataset metadata and link-probe results."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Any, Iterable
from urllib.parse import urlparse

from ptcatalog.core.model import Dataset, LinkKind, Liveness, ResourceLink
from ptcatalog.rating.config import RatingConfig
from ptcatalog.rating.probe import LinkProbeResult, ProbeStatus


@dataclass
class PreservationFeatures:
    """The feature vector consumed by the rating tree.

    Booleans are always defined: probing failures map to False, never to
    unknown. years_since_update is extracted but currently unused by the
    tree (reserved for a future refinement).
    """

    has_hosted_copy: bool
    has_open_license: bool
    all_links_alive: bool
    institution_hosted: bool
    years_since_update: int | None

    def to_dict(self) -> dict[str, Any]:
        return {
            "has_hosted_copy": self.has_hosted_copy,
            "has_open_license": self.has_open_license,
            "all_links_alive": self.all_links_alive,
            "institution_hosted": self.institution_hosted,
            "years_since_update": self.years_since_update,
        }


def extract_features(
    dataset: Dataset,
    probes: Iterable[LinkProbeResult],
    now: datetime,
    config: RatingConfig | None = None,
) -> PreservationFeatures:
    """Build the feature vector for a dataset.

    probes should cover every link URL of the dataset; a link without a
    probe result counts as DEAD.
    """
    config = config or RatingConfig()
    status_by_url = {p.url: p.status for p in probes}

    def link_alive(link: ResourceLink) -> bool:
        return status_by_url.get(link.url) is ProbeStatus.ALIVE

    hosted = dataset.hosted_copy()
    has_hosted_copy = hosted is not None and link_alive(hosted)

    all_links_alive = bool(dataset.links) and all(link_alive(l) for l in dataset.links)

    institution_hosted = any(
        config.is_institutional_host(urlparse(l.url).hostname or "") for l in dataset.links
    )

    years = None
    if dataset.year is not None:
        years = max(0, now.year - dataset.year)

    return PreservationFeatures(
        has_hosted_copy=has_hosted_copy,
        has_open_license=config.is_open_license(dataset.license),
        all_links_alive=all_links_alive,
        institution_hosted=institution_hosted,
        years_since_update=years,
    )


def recorded_probes(links: Iterable[ResourceLink]) -> list[LinkProbeResult]:
    """Synthesize probe results from each link's recorded liveness.

    Offline audit semantics: only a link recorded ALIVE counts as alive;
    UNPROBED is treated as DEAD.
    """
    return [
        LinkProbeResult.synthetic(
            l.url, ProbeStatus.ALIVE if l.alive is Liveness.ALIVE else ProbeStatus.DEAD
        )
        for l in links
    ]


def assume_live_probes(links: Iterable[ResourceLink]) -> list[LinkProbeResult]:
    """Synthesize probe results that trust declared links.

    Ingest semantics: a submitted URL is assumed reachable unless it was
    already probed DEAD. Used by the registry to rate new submissions
    without touching the network.
    """
    return [
        LinkProbeResult.synthetic(
            l.url, ProbeStatus.DEAD if l.alive is Liveness.DEAD else ProbeStatus.ALIVE
        )
        for l in links
    ]
