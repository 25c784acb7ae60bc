"""Feature extraction rules, including the probe-synthesis helpers."""

from datetime import datetime, timezone

from ptcatalog.core import LinkKind, Liveness, ResourceLink
from ptcatalog.rating import (
    RatingConfig,
    assume_live_probes,
    extract_features,
    recorded_probes,
)
from ptcatalog.rating.probe import LinkProbeResult, ProbeStatus
from tests.test_core_model import make_dataset

NOW = datetime(2026, 1, 1, tzinfo=timezone.utc)


def alive(url):
    return LinkProbeResult.synthetic(url, ProbeStatus.ALIVE)


def dead(url):
    return LinkProbeResult.synthetic(url, ProbeStatus.DEAD)


def test_hosted_copy_alive_and_open_license():
    ds = make_dataset(license="MIT")
    probes = [alive(l.url) for l in ds.links]
    features = extract_features(ds, probes, NOW)
    assert features.has_hosted_copy is True
    assert features.has_open_license is True
    assert features.all_links_alive is True


def test_hosted_copy_probed_dead_does_not_count():
    ds = make_dataset()
    probes = [alive("https://example.org/ner"), dead("https://hub.example.org/ner")]
    features = extract_features(ds, probes, NOW)
    assert features.has_hosted_copy is False
    assert features.all_links_alive is False


def test_zero_links_dataset():
    ds = make_dataset(links=[])
    features = extract_features(ds, [], NOW)
    assert features.has_hosted_copy is False
    assert features.all_links_alive is False
    assert features.institution_hosted is False


def test_missing_probe_counts_as_dead():
    ds = make_dataset()
    features = extract_features(ds, [alive("https://example.org/ner")], NOW)
    assert features.all_links_alive is False  # hosted-copy link has no probe


def test_open_license_set():
    config = RatingConfig()
    cases = {
        "MIT": True,
        "mit": True,
        "Apache-2.0": True,
        "CC0": True,
        "CC0-1.0": True,
        "CC-BY-4.0": True,
        "CC-BY-SA-4.0": True,
        "CC-BY-NC-ND-3.0": True,
        "GPL-3.0": False,
        "proprietary": False,
        None: False,
        "": False,
    }
    for license_id, expected in cases.items():
        assert config.is_open_license(license_id) is expected, license_id


def test_institution_hosted_suffix_match():
    config = RatingConfig(institutional_suffixes=(".edu", "inesctec.pt"))
    ds = make_dataset(
        links=[ResourceLink(LinkKind.HOMEPAGE, "https://www.inesctec.pt/dataset")]
    )
    features = extract_features(ds, recorded_probes(ds.links), NOW, config)
    assert features.institution_hosted is True

    # A host merely ending in the same characters must not match.
    other = make_dataset(links=[ResourceLink(LinkKind.HOMEPAGE, "https://notinesctec.pt/x")])
    features = extract_features(other, [], NOW, config)
    assert features.institution_hosted is False


def test_years_since_update():
    assert extract_features(make_dataset(year=2020), [], NOW).years_since_update == 6
    assert extract_features(make_dataset(year=2030), [], NOW).years_since_update == 0
    assert extract_features(make_dataset(year=None), [], NOW).years_since_update is None


def test_recorded_probes_treat_unprobed_as_dead():
    links = [
        ResourceLink(LinkKind.HOMEPAGE, "https://a.example", Liveness.ALIVE),
        ResourceLink(LinkKind.PAPER, "https://b.example", Liveness.UNPROBED),
        ResourceLink(LinkKind.REPOSITORY, "https://c.example", Liveness.DEAD),
    ]
    statuses = [p.status for p in recorded_probes(links)]
    assert statuses == [ProbeStatus.ALIVE, ProbeStatus.DEAD, ProbeStatus.DEAD]


def test_assume_live_probes_trust_unprobed_links():
    links = [
        ResourceLink(LinkKind.HOMEPAGE, "https://a.example", Liveness.ALIVE),
        ResourceLink(LinkKind.PAPER, "https://b.example", Liveness.UNPROBED),
        ResourceLink(LinkKind.REPOSITORY, "https://c.example", Liveness.DEAD),
    ]
    statuses = [p.status for p in assume_live_probes(links)]
    assert statuses == [ProbeStatus.ALIVE, ProbeStatus.ALIVE, ProbeStatus.DEAD]
