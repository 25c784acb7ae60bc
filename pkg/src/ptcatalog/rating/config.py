"""Configuration for feature extraction and link probing."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

DEFAULT_OPEN_LICENSES = frozenset({"MIT", "APACHE-2.0", "CC0", "CC0-1.0"})
# License identifiers starting with this prefix (any CC-BY variant) count as open.
OPEN_LICENSE_PREFIXES = ("CC-BY",)

DEFAULT_INSTITUTIONAL_SUFFIXES = (".edu", ".gov")


@dataclass
class RatingConfig:
    """Tunables of the rating engine.

    open_licenses are compared case-insensitively against the dataset's
    license identifier; institutional_suffixes are matched against link
    hostnames ("example.edu" matches both "example.edu" and ".edu").
    """

    open_licenses: frozenset[str] = DEFAULT_OPEN_LICENSES
    open_license_prefixes: tuple[str, ...] = OPEN_LICENSE_PREFIXES
    institutional_suffixes: tuple[str, ...] = DEFAULT_INSTITUTIONAL_SUFFIXES
    probe_timeout: float = 5.0
    probe_concurrency: int = 8
    probe_max_redirects: int = 5

    def is_open_license(self, license_id: str | None) -> bool:
        if not license_id:
            return False
        upper = license_id.upper()
        return upper in self.open_licenses or upper.startswith(self.open_license_prefixes)

    def is_institutional_host(self, host: str) -> bool:
        host = host.lower()
        for suffix in self.institutional_suffixes:
            bare = suffix.lower().lstrip(".")
            if host == bare or host.endswith("." + bare):
                return True
        return False

    @classmethod
    def from_file(cls, path: str | Path) -> "RatingConfig":
        """Load overrides from a JSON config file; absent keys keep defaults."""
        data = json.loads(Path(path).read_text())
        kwargs = {}
        if "open_licenses" in data:
            kwargs["open_licenses"] = frozenset(s.upper() for s in data["open_licenses"])
        if "open_license_prefixes" in data:
            kwargs["open_license_prefixes"] = tuple(
                s.upper() for s in data["open_license_prefixes"]
            )
        if "institutional_suffixes" in data:
            kwargs["institutional_suffixes"] = tuple(data["institutional_suffixes"])
        for key in ("probe_timeout", "probe_concurrency", "probe_max_redirects"):
            if key in data:
                kwargs[key] = data[key]
        return cls(**kwargs)
