"""Hub abstraction: anything that can turn a locator into rows of records.

The SDK never depends on a specific hosting hub; implementations of
HubFetcher are interchangeable. The bundled LocalDirectoryFetcher serves
fixtures from disk and backs the hermetic tests.
"""

from __future__ import annotations

import csv
import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

Rows = list[dict[str, Any]]


class FetchError(Exception):
    """The hub could not deliver rows for a locator."""


class HubFetcher(ABC):
    @abstractmethod
    def fetch(self, locator: str) -> Rows:
        """Return the rows stored under locator; raise FetchError on any failure."""


class LocalDirectoryFetcher(HubFetcher):
    """Serves locators from a directory, one file per locator.

    The locator, minus any scheme prefix, is a relative path; rows live in
    <root>/<path>.json (a JSON array of flat objects) or <root>/<path>.csv
    (header row + records, all values strings). A locator
    "hub.example.org/liaad/ner" therefore maps to the file
    <root>/hub.example.org/liaad/ner.json.
    """

    def __init__(self, root: str | Path):
        self._root = Path(root).resolve()

    def fetch(self, locator: str) -> Rows:
        relative = locator.split("://", 1)[-1].strip("/")
        if not relative:
            raise FetchError(f"empty locator: {locator!r}")
        base = (self._root / relative).resolve()
        if not str(base).startswith(str(self._root)):
            raise FetchError(f"locator escapes the fixture directory: {locator!r}")

        json_path = base.with_suffix(base.suffix + ".json")
        csv_path = base.with_suffix(base.suffix + ".csv")
        if json_path.exists():
            return self._read_json(json_path, locator)
        if csv_path.exists():
            return self._read_csv(csv_path)
        raise FetchError(f"no fixture file for locator {locator!r}")

    @staticmethod
    def _read_json(path: Path, locator: str) -> Rows:
        try:
            rows = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise FetchError(f"bad JSON fixture for {locator!r}: {exc}") from exc
        if not isinstance(rows, list):
            raise FetchError(f"fixture for {locator!r} is not a JSON array")
        return rows

    @staticmethod
    def _read_csv(path: Path) -> Rows:
        with open(path, newline="") as handle:
            return [dict(row) for row in csv.DictReader(handle)]
