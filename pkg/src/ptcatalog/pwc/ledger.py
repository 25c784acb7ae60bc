"""Sync bookkeeping: which local dataset maps to which external record.

The ledger is a JSON file holding at most one record per
(dataset id, external endpoint) pair. It is what makes repeated syncs
idempotent; losing it is recoverable through name-match reconciliation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any


@dataclass
class SyncRecord:
    dataset_id: str
    external_id: str
    last_synced_at: datetime
    payload_hash: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "dataset_id": self.dataset_id,
            "external_id": self.external_id,
            "last_synced_at": self.last_synced_at.astimezone(timezone.utc).isoformat(),
            "payload_hash": self.payload_hash,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SyncRecord":
        return cls(
            dataset_id=str(data["dataset_id"]),
            external_id=str(data["external_id"]),
            last_synced_at=datetime.fromisoformat(str(data["last_synced_at"])),
            payload_hash=str(data["payload_hash"]),
        )


class SyncLedger:
    """In-memory view of the ledger file, keyed by endpoint then dataset id."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._records: dict[str, dict[str, SyncRecord]] = {}
        if self.path and self.path.exists():
            self._load()

    def _load(self) -> None:
        data = json.loads(self.path.read_text())
        for endpoint, records in data.get("endpoints", {}).items():
            self._records[endpoint] = {
                dataset_id: SyncRecord.from_dict(doc) for dataset_id, doc in records.items()
            }

    def save(self) -> None:
        if self.path is None:
            return
        doc = {
            "endpoints": {
                endpoint: {ds_id: rec.to_dict() for ds_id, rec in records.items()}
                for endpoint, records in self._records.items()
            }
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_name(self.path.name + ".tmp")
        tmp.write_text(json.dumps(doc, indent=2))
        tmp.replace(self.path)

    def get(self, endpoint: str, dataset_id: str) -> SyncRecord | None:
        return self._records.get(endpoint, {}).get(dataset_id)

    def put(self, endpoint: str, record: SyncRecord) -> None:
        self._records.setdefault(endpoint, {})[record.dataset_id] = record

    def owner_of(self, endpoint: str, external_id: str) -> str | None:
        """The local dataset id already mapped to an external id, if any."""
        for dataset_id, record in self._records.get(endpoint, {}).items():
            if record.external_id == external_id:
                return dataset_id
        return None

    def records(self, endpoint: str) -> dict[str, SyncRecord]:
        return dict(self._records.get(endpoint, {}))
