"""Client for the external catalog: login plus idempotent dataset push.

Transport errors are retried with exponential backoff; HTTP 4xx answers are
never retried. A sync ledger keeps one external id per local dataset, and a
name lookup reconciles against remote state when the ledger has no entry,
so a lost ledger produces re-links instead of duplicates.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from datetime import datetime, timezone

import httpx

from ptcatalog.core.model import Dataset
from ptcatalog.errors import ConflictError, TransportError, raise_for_response
from ptcatalog.pwc.ledger import SyncLedger, SyncRecord
from ptcatalog.pwc.payload import payload_hash, to_external_payload

logger = logging.getLogger(__name__)

RETRY_ATTEMPTS = 3


@dataclass
class ExternalCredentials:
    """Login pair for the external catalog; the password never reaches logs."""

    username: str
    password: str

    def __post_init__(self):
        if not self.username or not self.password:
            raise ValueError("username and password must both be non-empty")

    def __repr__(self) -> str:
        return f"ExternalCredentials(username={self.username!r}, password='***')"

    __str__ = __repr__


class ExternalSession:
    """An authenticated connection to one external endpoint."""

    def __init__(self, endpoint: str, http: httpx.Client, backoff: float):
        self.endpoint = endpoint.rstrip("/")
        self._http = http
        self._backoff = backoff

    def request(self, method: str, path: str, **kwargs) -> httpx.Response:
        url = self.endpoint + path
        last_error: Exception | None = None
        for attempt in range(RETRY_ATTEMPTS):
            if attempt:
                time.sleep(self._backoff * 2 ** (attempt - 1))
            try:
                response = self._http.request(method, url, **kwargs)
            except httpx.HTTPError as exc:
                last_error = exc
                logger.warning("transport failure (%d/%d) on %s: %s",
                               attempt + 1, RETRY_ATTEMPTS, url, exc)
                continue
            raise_for_response(response)
            return response
        raise TransportError(url, last_error)


def login(
    credentials: ExternalCredentials,
    endpoint: str,
    http: httpx.Client | None = None,
    backoff: float = 0.5,
) -> ExternalSession:
    """Authenticate against the external catalog and return a reusable session."""
    session = ExternalSession(endpoint, http or httpx.Client(timeout=10.0), backoff)
    session.request(
        "POST",
        "/login",
        content=f"username={credentials.username}&password={credentials.password}",
        headers={"Content-Type": "application/x-www-form-urlencoded"},
    )
    return session


def sync_insert(
    session: ExternalSession, dataset: Dataset, ledger: SyncLedger
) -> tuple[str, SyncLedger]:
    """Publish one dataset, doing nothing when the remote copy is current.

    Exactly one remote record per dataset: a ledger hit with a matching
    payload hash is a no-op (zero remote calls); a differing hash updates
    the remote record; no ledger entry triggers name reconciliation before
    any create.
    """
    payload = to_external_payload(dataset)
    digest = payload_hash(payload)
    endpoint = session.endpoint

    record = ledger.get(endpoint, dataset.id)
    if record is not None:
        if record.payload_hash == digest:
            logger.info("dataset %s unchanged; skipping remote call", dataset.english_name)
            return record.external_id, ledger
        session.request("PATCH", f"/api/datasets/{record.external_id}", json=payload.to_dict())
        ledger.put(endpoint, _fresh_record(dataset.id, record.external_id, digest))
        return record.external_id, ledger

    remote_matches = session.request(
        "GET", "/api/datasets", params={"name": payload.name}
    ).json()
    if remote_matches:
        external_id = str(remote_matches[0]["id"])
        owner = ledger.owner_of(endpoint, external_id)
        if owner is not None and owner != dataset.id:
            raise ConflictError(
                409,
                f"remote record {external_id!r} is owned by local dataset {owner!r}",
            )
        # Ledger lost or first contact: adopt the remote record, then refresh it.
        session.request("PATCH", f"/api/datasets/{external_id}", json=payload.to_dict())
        ledger.put(endpoint, _fresh_record(dataset.id, external_id, digest))
        return external_id, ledger

    created = session.request("POST", "/api/datasets", json=payload.to_dict()).json()
    external_id = str(created["id"])
    ledger.put(endpoint, _fresh_record(dataset.id, external_id, digest))
    return external_id, ledger


def _fresh_record(dataset_id: str, external_id: str, digest: str) -> SyncRecord:
    return SyncRecord(
        dataset_id=dataset_id,
        external_id=external_id,
        last_synced_at=datetime.now(timezone.utc),
        payload_hash=digest,
    )
