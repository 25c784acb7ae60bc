"""One-way push synchronization with an external research-catalog API."""

from ptcatalog.pwc.client import ExternalCredentials, ExternalSession, login, sync_insert
from ptcatalog.pwc.ledger import SyncLedger, SyncRecord
from ptcatalog.pwc.payload import ExternalDatasetPayload, payload_hash, to_external_payload

__all__ = [
    "ExternalCredentials",
    "ExternalDatasetPayload",
    "ExternalSession",
    "SyncLedger",
    "SyncRecord",
    "login",
    "payload_hash",
    "sync_insert",
    "to_external_payload",
]
