"""HTTP liveness probing of resource links."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Iterable
from urllib.parse import urlparse

import httpx

from ptcatalog.rating.config import RatingConfig

logger = logging.getLogger(__name__)


class ProbeStatus(str, Enum):
    ALIVE = "ALIVE"
    DEAD = "DEAD"


@dataclass
class LinkProbeResult:
    """Outcome of probing one URL. ALIVE iff a 200..399 response arrived in time."""

    url: str
    status: ProbeStatus
    http_code: int | None
    probed_at: datetime

    def to_dict(self) -> dict[str, Any]:
        return {
            "url": self.url,
            "status": self.status.value,
            "http_code": self.http_code,
            "probed_at": self.probed_at.astimezone(timezone.utc).isoformat(),
        }

    @classmethod
    def synthetic(cls, url: str, status: ProbeStatus) -> "LinkProbeResult":
        """A result not backed by a network exchange (recorded or assumed state)."""
        return cls(url=url, status=status, http_code=None, probed_at=datetime.now(timezone.utc))


def _probe_one(url: str, timeout: float, config: RatingConfig) -> LinkProbeResult:
    probed_at = datetime.now(timezone.utc)
    parsed = urlparse(url)
    if parsed.scheme not in ("http", "https") or not parsed.netloc:
        return LinkProbeResult(url, ProbeStatus.DEAD, None, probed_at)
    try:
        with httpx.Client(
            timeout=timeout,
            follow_redirects=True,
            max_redirects=config.probe_max_redirects,
        ) as client:
            response = client.head(url)
            if response.status_code == 405:
                response = client.get(url)
        code = response.status_code
        status = ProbeStatus.ALIVE if 200 <= code < 400 else ProbeStatus.DEAD
        return LinkProbeResult(url, status, code, probed_at)
    except httpx.HTTPError as exc:
        logger.debug("probe failed for %s: %s", url, exc)
        return LinkProbeResult(url, ProbeStatus.DEAD, None, probed_at)


def probe_links(
    urls: Iterable[str],
    timeout: float | None = None,
    config: RatingConfig | None = None,
) -> list[LinkProbeResult]:
    """Probe every URL, bounded fan-out, results in input order.

    Network failures, timeouts, and malformed URLs yield DEAD results;
    the call never raises on unreachable hosts.
    """
    config = config or RatingConfig()
    timeout = config.probe_timeout if timeout is None else timeout
    urls = list(urls)
    if not urls:
        return []
    workers = max(1, min(config.probe_concurrency, len(urls)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda u: _probe_one(u, timeout, config), urls))
