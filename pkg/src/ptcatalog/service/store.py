"""File-backed registry store.

One JSON document holds the whole catalog. Every committed mutation bumps
the revision and is written with atomic replace-on-write (temp file, fsync,
rename), so a crash can never leave a half-written store. Mutations are
serialized through a single writer lock; readers see the last committed
snapshot without locking.
"""

from __future__ import annotations

import hmac
import json
import logging
import os
import secrets
import threading
import uuid
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable

from ptcatalog.core.model import (
    ApiToken,
    Dataset,
    LanguageVariety,
    NLPTask,
    ParseError,
    StoragePolicy,
)
from ptcatalog.core.policy import derive_storage_policy
from ptcatalog.core.validation import Violation, validate_dataset, validate_task
from ptcatalog.rating import RatingConfig, assume_live_probes, extract_features, predict_rating
from ptcatalog.service.errors import AuthFailure, Conflict, NotFound, ValidationFailed

logger = logging.getLogger(__name__)

TOKEN_BYTES = 32  # 256 bits of randomness, well above the 192-bit floor


@dataclass
class StoreSnapshot:
    """The committed state of the registry at one revision."""

    datasets: list[Dataset] = field(default_factory=list)
    tasks: list[NLPTask] = field(default_factory=list)
    tokens: list[ApiToken] = field(default_factory=list)
    revision: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "revision": self.revision,
            "datasets": [d.to_dict() for d in self.datasets],
            "tasks": [t.to_dict() for t in self.tasks],
            "tokens": [t.to_dict() for t in self.tokens],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "StoreSnapshot":
        return cls(
            datasets=[Dataset.from_dict(d) for d in data.get("datasets", [])],
            tasks=[NLPTask.from_dict(t) for t in data.get("tasks", [])],
            tokens=[ApiToken.from_dict(t) for t in data.get("tokens", [])],
            revision=int(data.get("revision", 0)),
        )


def verify_snapshot(snapshot: StoreSnapshot) -> list[Violation]:
    """Full-store invariant scan; used on load and exposed for tests."""
    violations: list[Violation] = []
    task_ids = {t.id for t in snapshot.tasks}

    seen_task_names: set[str] = set()
    for task in snapshot.tasks:
        violations.extend(validate_task(task))
        folded = task.name.casefold()
        if folded in seen_task_names:
            violations.append(Violation("name", f"duplicate task name: {task.name!r}"))
        seen_task_names.add(folded)

    seen_dataset_names: set[str] = set()
    for ds in snapshot.datasets:
        violations.extend(validate_dataset(ds, task_ids))
        folded = ds.english_name.casefold()
        if folded in seen_dataset_names:
            violations.append(
                Violation("english_name", f"duplicate dataset name: {ds.english_name!r}")
            )
        seen_dataset_names.add(folded)
        if ds.preservation is not None and ds.policy is not derive_storage_policy(ds.preservation):
            violations.append(
                Violation("policy", f"policy inconsistent with rating for {ds.english_name!r}")
            )
    return violations


class RegistryStore:
    """Catalog state plus the commit path that keeps it consistent and durable."""

    def __init__(
        self,
        path: str | Path,
        admin_secret: str,
        rating_config: RatingConfig | None = None,
    ):
        self._path = Path(path)
        self._admin_secret = admin_secret
        self._rating_config = rating_config or RatingConfig()
        self._write_lock = threading.Lock()
        self._snapshot = self._load()

    # ------------------------------------------------------------------
    # snapshot & persistence

    @property
    def snapshot(self) -> StoreSnapshot:
        return self._snapshot

    @property
    def revision(self) -> int:
        return self._snapshot.revision

    def _load(self) -> StoreSnapshot:
        if not self._path.exists():
            return StoreSnapshot()
        snapshot = StoreSnapshot.from_dict(json.loads(self._path.read_text()))
        problems = verify_snapshot(snapshot)
        if problems:
            detail = "; ".join(f"{v.field}: {v.message}" for v in problems)
            raise ValueError(f"persistence file violates store invariants: {detail}")
        return snapshot

    def _persist(self, snapshot: StoreSnapshot) -> None:
        tmp = self._path.with_name(self._path.name + ".tmp")
        tmp.parent.mkdir(parents=True, exist_ok=True)
        with open(tmp, "w") as handle:
            json.dump(snapshot.to_dict(), handle, indent=2)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, self._path)
        dir_fd = os.open(self._path.parent, os.O_RDONLY)
        try:
            os.fsync(dir_fd)
        finally:
            os.close(dir_fd)

    def _commit(self, mutate: Callable[[StoreSnapshot], StoreSnapshot]) -> StoreSnapshot:
        """Apply a mutation under the writer lock and make it durable.

        The mutation callback receives the current snapshot and returns the
        next one (revision not yet bumped). Readers keep seeing the old
        snapshot until the new one is on disk.
        """
        with self._write_lock:
            current = self._snapshot
            new = mutate(current)
            new = replace(new, revision=current.revision + 1)
            self._persist(new)
            self._snapshot = new
            return new

    # ------------------------------------------------------------------
    # tokens

    def issue_token(self, label: str, admin_secret: str) -> ApiToken:
        self._check_admin_secret(admin_secret)
        token = ApiToken(
            token=secrets.token_urlsafe(TOKEN_BYTES),
            label=label,
            issued_at=datetime.now(timezone.utc),
        )
        self._commit(
            lambda snap: replace(snap, tokens=[*snap.tokens, token])
        )
        return token

    def revoke_token(self, token_value: str, admin_secret: str) -> None:
        self._check_admin_secret(admin_secret)

        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            if not any(t.token == token_value for t in snap.tokens):
                raise NotFound("unknown token")
            tokens = [
                replace(t, revoked=True) if t.token == token_value else t
                for t in snap.tokens
            ]
            return replace(snap, tokens=tokens)

        self._commit(mutate)

    def is_authorized(self, token_value: str) -> bool:
        """True iff the value matches an issued, non-revoked token."""
        if not token_value:
            return False
        authorized = False
        for token in self._snapshot.tokens:
            # Constant-time compare over every candidate.
            if hmac.compare_digest(token.token, token_value) and not token.revoked:
                authorized = True
        return authorized

    def _check_admin_secret(self, supplied: str) -> None:
        if not secrets.compare_digest(supplied or "", self._admin_secret):
            raise AuthFailure("admin secret does not match")

    # ------------------------------------------------------------------
    # tasks

    def list_tasks(self) -> list[NLPTask]:
        return sorted(self._snapshot.tasks, key=lambda t: t.name.casefold())

    def get_task(self, task_id: str) -> NLPTask:
        for task in self._snapshot.tasks:
            if task.id == task_id:
                return task
        raise NotFound(f"no task with id {task_id!r}")

    def create_task(self, candidate: NLPTask) -> NLPTask:
        violations = validate_task(candidate)
        if violations:
            raise ValidationFailed(violations)
        created = replace(candidate, id=candidate.id or uuid.uuid4().hex)

        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            self._check_task_unique(snap, created)
            return replace(snap, tasks=[*snap.tasks, created])

        self._commit(mutate)
        return created

    def update_task(self, task_id: str, candidate: NLPTask) -> NLPTask:
        violations = validate_task(candidate)
        if violations:
            raise ValidationFailed(violations)
        updated = replace(candidate, id=task_id)

        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            if not any(t.id == task_id for t in snap.tasks):
                raise NotFound(f"no task with id {task_id!r}")
            self._check_task_unique(snap, updated, exclude_id=task_id)
            tasks = [updated if t.id == task_id else t for t in snap.tasks]
            return replace(snap, tasks=tasks)

        self._commit(mutate)
        return updated

    def delete_task(self, task_id: str) -> None:
        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            if not any(t.id == task_id for t in snap.tasks):
                raise NotFound(f"no task with id {task_id!r}")
            referencing = [d.english_name for d in snap.datasets if task_id in d.task_ids]
            if referencing:
                raise Conflict(
                    f"task is referenced by datasets: {', '.join(sorted(referencing))}"
                )
            return replace(snap, tasks=[t for t in snap.tasks if t.id != task_id])

        self._commit(mutate)

    @staticmethod
    def _check_task_unique(snap: StoreSnapshot, task: NLPTask, exclude_id: str | None = None):
        folded = task.name.casefold()
        for existing in snap.tasks:
            if existing.id != exclude_id and existing.name.casefold() == folded:
                raise Conflict(f"task name already exists: {task.name!r}")

    # ------------------------------------------------------------------
    # datasets

    def list_datasets(
        self,
        task: str | None = None,
        variety: str | None = None,
        policy: str | None = None,
    ) -> list[Dataset]:
        """Datasets matching every supplied filter, sorted by case-folded name.

        Unknown filter values match nothing (an empty list, not an error).
        """
        snapshot = self._snapshot
        results = list(snapshot.datasets)

        if task is not None:
            matching_ids = {
                t.id for t in snapshot.tasks if t.name.casefold() == task.casefold()
            }
            results = [d for d in results if matching_ids.intersection(d.task_ids)]

        if variety is not None:
            try:
                wanted = LanguageVariety(variety)
            except ValueError:
                return []
            results = [d for d in results if wanted in d.varieties]

        if policy is not None:
            try:
                wanted_policy = StoragePolicy(policy)
            except ValueError:
                return []
            results = [d for d in results if d.policy is wanted_policy]

        return sorted(results, key=lambda d: d.english_name.casefold())

    def get_dataset(self, dataset_id: str) -> Dataset:
        for ds in self._snapshot.datasets:
            if ds.id == dataset_id:
                return ds
        raise NotFound(f"no dataset with id {dataset_id!r}")

    def get_dataset_by_name(self, english_name: str) -> Dataset:
        folded = english_name.casefold()
        for ds in self._snapshot.datasets:
            if ds.english_name.casefold() == folded:
                return ds
        raise NotFound(f"no dataset named {english_name!r}")

    def create_dataset(self, candidate: Dataset) -> Dataset:
        prepared = self._prepare_dataset(candidate, new_id=candidate.id or uuid.uuid4().hex)

        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            self._validate_against(snap, prepared)
            self._check_dataset_unique(snap, prepared)
            return replace(snap, datasets=[*snap.datasets, prepared])

        self._commit(mutate)
        return prepared

    def update_dataset(
        self,
        dataset_id: str,
        candidate: Dataset,
        expected_revision: int | None = None,
    ) -> Dataset:
        prepared = self._prepare_dataset(candidate, new_id=dataset_id)

        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            if expected_revision is not None and snap.revision != expected_revision:
                raise Conflict(
                    f"stale update: expected revision {expected_revision}, store at {snap.revision}"
                )
            if not any(d.id == dataset_id for d in snap.datasets):
                raise NotFound(f"no dataset with id {dataset_id!r}")
            self._validate_against(snap, prepared)
            self._check_dataset_unique(snap, prepared, exclude_id=dataset_id)
            datasets = [prepared if d.id == dataset_id else d for d in snap.datasets]
            return replace(snap, datasets=datasets)

        self._commit(mutate)
        return prepared

    def delete_dataset(self, dataset_id: str) -> None:
        def mutate(snap: StoreSnapshot) -> StoreSnapshot:
            if not any(d.id == dataset_id for d in snap.datasets):
                raise NotFound(f"no dataset with id {dataset_id!r}")
            return replace(snap, datasets=[d for d in snap.datasets if d.id != dataset_id])

        self._commit(mutate)

    def _prepare_dataset(self, candidate: Dataset, new_id: str) -> Dataset:
        """Assign the id and fill in rating and policy where the caller omitted them.

        A submitted rating always wins; prediction only fills gaps. The
        ingest-time prediction trusts declared links that were not yet
        probed (probing happens out of band via the admin tooling).
        """
        prepared = replace(candidate, id=new_id)
        if prepared.preservation is None:
            features = extract_features(
                prepared,
                assume_live_probes(prepared.links),
                datetime.now(timezone.utc),
                self._rating_config,
            )
            prepared = replace(prepared, preservation=predict_rating(features))
        if prepared.policy is None and 1 <= prepared.preservation.score <= 5:
            prepared = replace(prepared, policy=derive_storage_policy(prepared.preservation))
        return prepared

    @staticmethod
    def _validate_against(snap: StoreSnapshot, candidate: Dataset) -> None:
        violations = validate_dataset(candidate, {t.id for t in snap.tasks})
        if violations:
            raise ValidationFailed(violations)

    @staticmethod
    def _check_dataset_unique(snap: StoreSnapshot, ds: Dataset, exclude_id: str | None = None):
        folded = ds.english_name.casefold()
        for existing in snap.datasets:
            if existing.id != exclude_id and existing.english_name.casefold() == folded:
                raise Conflict(f"dataset name already exists: {ds.english_name!r}")

    # ------------------------------------------------------------------
    # seeding

    def seed_from_fixture(self, fixture: dict[str, Any]) -> StoreSnapshot:
        """Replace the store content with a fixture of datasets and tasks.

        Fixture schema is the snapshot form minus tokens. Records missing a
        rating go through the same ingest pipeline as API submissions.
        """
        tasks = [NLPTask.from_dict(t) for t in fixture.get("tasks", [])]
        for i, task in enumerate(tasks):
            if not task.id:
                tasks[i] = replace(task, id=uuid.uuid4().hex)
            problems = validate_task(tasks[i])
            if problems:
                raise ValidationFailed(problems)

        datasets = []
        for raw in fixture.get("datasets", []):
            parsed = Dataset.from_dict(raw)
            datasets.append(self._prepare_dataset(parsed, parsed.id or uuid.uuid4().hex))

        snapshot = StoreSnapshot(
            datasets=datasets,
            tasks=tasks,
            tokens=list(self._snapshot.tokens),
            revision=int(fixture.get("revision", 0)),
        )
        problems = verify_snapshot(snapshot)
        if problems:
            raise ValidationFailed(problems)

        with self._write_lock:
            self._persist(snapshot)
            self._snapshot = snapshot
        logger.info(
            "seeded store with %d datasets, %d tasks (revision %d)",
            len(datasets), len(tasks), snapshot.revision,
        )
        return snapshot
