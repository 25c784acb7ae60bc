"""Acceptance suite: one test per release criterion, at its stated budget.

Each test asserts its own wall-clock budget; the conftest hook prints one
PASS/FAIL line per criterion at the end of the run.
"""

import itertools
import json
import os
import random
import signal
import socket
import string
import subprocess
import sys
import time

import httpx
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ptcatalog.admin.cli import main as admin_main
from ptcatalog.client import CatalogClient, LocalDirectoryFetcher, MaterializedDataset, MetadataOnly
from ptcatalog.client.sdk import FallbackReason
from ptcatalog.core import PreservationRating, StoragePolicy, derive_storage_policy
from ptcatalog.pwc import ExternalCredentials, SyncLedger, login, sync_insert
from ptcatalog.pwc.fake_server import create_fake_pwc_app
from ptcatalog.rating import PreservationFeatures, predict_rating
from ptcatalog.service.app import create_app
from ptcatalog.service.store import RegistryStore, StoreSnapshot
from tests.conftest import ADMIN_SECRET, LiveServer, seed_fixture
from tests.test_acceptance_support import random_dataset_doc
from tests.test_rating_tree import ORACLE

HOSTED_ROWS = [
    {"tokens": "O Pedro vive em Lisboa", "tags": "O B-PER O O B-LOC"},
    {"tokens": "A Maria trabalha no Porto", "tags": "O B-PER O O B-LOC"},
    {"tokens": "Chove em Coimbra", "tags": "O O B-LOC"},
]


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.seconds, f"over budget: {elapsed:.1f}s >= {self.seconds}s"


def test_listing2_replay_token_then_task_insert_then_conflict(tmp_path):
    budget = Budget(10)
    store = RegistryStore(tmp_path / "store.json", ADMIN_SECRET)
    server = LiveServer(create_app(store)).start()
    try:
        token = httpx.post(
            f"{server.base_url}/api/tokens",
            json={"label": "acceptance", "admin_secret": ADMIN_SECRET},
        ).json()["token"]

        runner = CliRunner()
        args = [
            "--url", server.base_url, "--token", token,
            "task", "insert",
            "--name", "Named Entity Recognition",
            "--acronym", "NER",
            "--pwc-id", "named-entity-recognition",
        ]
        first = runner.invoke(admin_main, args)
        assert first.exit_code == 0, first.output
        record = json.loads(first.output)
        assert record["name"] == "Named Entity Recognition"
        assert record["acronym"] == "NER"
        assert record["papers_with_code_ids"] == ["named-entity-recognition"]

        second = runner.invoke(admin_main, args)
        assert second.exit_code == 1, second.output
        assert "error" in second.output
    finally:
        server.stop()
    budget.check()


def test_listing1_replay_task_listing_and_hosted_copy_loading(tmp_path):
    budget = Budget(10)
    store = RegistryStore(tmp_path / "store.json", ADMIN_SECRET)
    store.seed_from_fixture(seed_fixture())

    hub_dir = tmp_path / "hub"
    rows_file = hub_dir / "hub.example.org" / "hosted-ner.json"
    rows_file.parent.mkdir(parents=True)
    rows_file.write_text(json.dumps(HOSTED_ROWS))
    fetcher = LocalDirectoryFetcher(hub_dir)

    http = TestClient(create_app(store))
    client = CatalogClient(base_url="http://testserver", http=http)

    ner = client.all_datasets(nlp_task="Named Entity Recognition")
    assert len(ner) == 2
    assert {d.english_name for d in ner} == {"Hosted NER Corpus", "Plain NER Corpus"}

    hosted = client.load_dataset("Hosted NER Corpus", fetcher)
    assert isinstance(hosted, MaterializedDataset)
    assert hosted.rows == HOSTED_ROWS

    plain = client.load_dataset("Plain NER Corpus", fetcher)
    assert isinstance(plain, MetadataOnly)
    assert plain.reason is FallbackReason.NO_HOSTED_COPY
    budget.check()


def test_rating_oracle_all_32_combinations_and_monotonicity():
    budget = Budget(1)
    cases = 0
    for hosted, open_, alive, inst in itertools.product((False, True), repeat=4):
        for years in (None, 3):
            features = PreservationFeatures(hosted, open_, alive, inst, years)
            assert predict_rating(features).score == ORACLE[(hosted, open_, alive, inst)]
            cases += 1
    assert cases == 32

    for base_bits in itertools.product((False, True), repeat=4):
        base_score = predict_rating(PreservationFeatures(*base_bits, None)).score
        for position in range(4):
            if base_bits[position]:
                continue
            flipped = list(base_bits)
            flipped[position] = True
            flipped_score = predict_rating(PreservationFeatures(*flipped, None)).score
            assert flipped_score >= base_score
    budget.check()


def test_hybrid_policy_invariant_on_200_random_ingests(tmp_path):
    budget = Budget(30)
    store = RegistryStore(tmp_path / "store.json", ADMIN_SECRET)
    client = TestClient(create_app(store))
    token = client.post(
        "/api/tokens", json={"label": "bulk", "admin_secret": ADMIN_SECRET}
    ).json()["token"]
    auth = {"Authorization": f"Bearer {token}"}

    task_id = client.post(
        "/api/nlp-tasks", json={"name": "Named Entity Recognition", "acronym": "NER"},
        headers=auth,
    ).json()["id"]

    rng = random.Random(20260810)
    for index in range(200):
        doc = random_dataset_doc(rng, index, task_id)
        assert "preservation" not in doc and "policy" not in doc
        response = client.post("/api/datasets", json=doc, headers=auth)
        assert response.status_code == 201, response.text

    everything = client.get("/api/datasets").json()
    assert len(everything) == 200
    for doc in everything:
        rating = PreservationRating.from_dict(doc["preservation"])
        assert doc["policy"] == derive_storage_policy(rating).value

    flagged = client.get("/api/datasets", params={"policy": "BACKUP_REQUIRED"}).json()
    brute = [
        doc for doc in everything
        if derive_storage_policy(PreservationRating.from_dict(doc["preservation"]))
        is StoragePolicy.BACKUP_REQUIRED
    ]
    assert flagged == brute
    budget.check()


def test_listing4_replay_sync_idempotence_against_fake_server(tmp_path, seeded_store):
    budget = Budget(10)
    fake = LiveServer(create_fake_pwc_app("liaad", "letmein")).start()
    try:
        session = login(ExternalCredentials("liaad", "letmein"), fake.base_url, backoff=0.05)
        ledger = SyncLedger(tmp_path / "ledger.json")
        dataset = seeded_store.get_dataset("ds-hosted-ner")

        def debug(path):
            return httpx.get(fake.base_url + path).json()

        external_id, ledger = sync_insert(session, dataset, ledger)
        assert len(debug("/debug/datasets")["datasets"]) == 1
        writes_after_first = [
            c for c in debug("/debug/calls")["calls"]
            if c["method"] in ("POST", "PATCH") and c["path"] != "/login"
        ]
        assert len(writes_after_first) == 1

        sync_insert(session, dataset, ledger)
        writes_after_second = [
            c for c in debug("/debug/calls")["calls"]
            if c["method"] in ("POST", "PATCH") and c["path"] != "/login"
        ]
        assert writes_after_second == writes_after_first  # zero new write calls

        edited = seeded_store.update_dataset(
            "ds-hosted-ner",
            _with_description(dataset, "freshly edited"),
        )
        sync_insert(session, edited, ledger)
        writes_after_edit = [
            c for c in debug("/debug/calls")["calls"]
            if c["method"] in ("POST", "PATCH") and c["path"] != "/login"
        ]
        assert len(writes_after_edit) == len(writes_after_first) + 1
        assert writes_after_edit[-1] == {
            "method": "PATCH", "path": f"/api/datasets/{external_id}"
        }
        remote = debug("/debug/datasets")["datasets"][external_id]
        assert remote["description"] == "freshly edited"
    finally:
        fake.stop()
    budget.check()


def _with_description(dataset, text):
    from dataclasses import replace

    return replace(dataset, description=text)


def _free_port():
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def _spawn_registry(store_path, port):
    process = subprocess.Popen(
        [
            sys.executable, "-m", "ptcatalog.service.main",
            "--listen", f"127.0.0.1:{port}",
            "--store", str(store_path),
            "--admin-secret", ADMIN_SECRET,
        ],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    base_url = f"http://127.0.0.1:{port}"
    deadline = time.monotonic() + 15
    while True:
        try:
            httpx.get(base_url + "/health", timeout=0.5)
            break
        except httpx.HTTPError:
            if time.monotonic() > deadline:
                process.kill()
                raise RuntimeError("registry subprocess did not come up")
            time.sleep(0.05)
    return process, base_url


@pytest.mark.parametrize("mutations", [1, 10, 100])
def test_crash_consistency_snapshot_survives_sigkill(tmp_path, mutations):
    budget = Budget(60)
    store_path = tmp_path / f"store-{mutations}.json"
    process, base_url = _spawn_registry(store_path, _free_port())
    try:
        token = httpx.post(
            f"{base_url}/api/tokens",
            json={"label": "crash", "admin_secret": ADMIN_SECRET},
        ).json()["token"]
        auth = {"Authorization": f"Bearer {token}"}
        task_id = httpx.post(
            f"{base_url}/api/nlp-tasks",
            json={"name": "Named Entity Recognition", "acronym": "NER"},
            headers=auth,
        ).json()["id"]

        for index in range(mutations):
            response = httpx.post(
                f"{base_url}/api/datasets",
                json={
                    "english_name": f"Crash Corpus {index}",
                    "task_ids": [task_id],
                    "varieties": ["EUROPEAN_PT"],
                    "links": [{"kind": "HOMEPAGE", "url": f"https://example.org/c{index}"}],
                },
                headers=auth,
            )
            assert response.status_code == 201

        committed_bytes = store_path.read_bytes()
        committed = StoreSnapshot.from_dict(json.loads(committed_bytes))
        revision_before = httpx.get(f"{base_url}/health").json()["revision"]
        assert committed.revision == revision_before
    finally:
        os.kill(process.pid, signal.SIGKILL)
        process.wait(timeout=10)

    # The file is untouched by the kill.
    assert store_path.read_bytes() == committed_bytes

    # A fresh service instance reproduces the committed snapshot exactly.
    reloaded = RegistryStore(store_path, ADMIN_SECRET)
    assert reloaded.snapshot == committed
    assert reloaded.revision == revision_before

    process, base_url = _spawn_registry(store_path, _free_port())
    try:
        assert httpx.get(f"{base_url}/health").json()["revision"] == revision_before
        served = httpx.get(f"{base_url}/api/datasets").json()
        assert served == [d.to_dict() for d in reloaded.list_datasets()]
    finally:
        process.terminate()
        process.wait(timeout=10)
    budget.check()


def test_auth_suite_invalid_and_revoked_tokens_rejected(seeded_store):
    budget = Budget(10)
    client = TestClient(create_app(seeded_store))
    mutating = [
        ("POST", "/api/nlp-tasks"),
        ("PUT", "/api/nlp-tasks/task-ner"),
        ("DELETE", "/api/nlp-tasks/task-ner"),
        ("POST", "/api/datasets"),
        ("PUT", "/api/datasets/ds-plain-ner"),
        ("DELETE", "/api/datasets/ds-plain-ner"),
    ]

    rng = random.Random(1337)
    alphabet = string.ascii_letters + string.digits + "-_"
    fakes = ["".join(rng.choices(alphabet, k=rng.randint(8, 64))) for _ in range(100)]
    for fake in fakes:
        for method, path in mutating:
            response = client.request(
                method, path, json={}, headers={"Authorization": f"Bearer {fake}"}
            )
            assert response.status_code == 401, (method, path)

    revoked = seeded_store.issue_token("to-revoke", ADMIN_SECRET).token
    seeded_store.revoke_token(revoked, ADMIN_SECRET)
    for method, path in mutating:
        response = client.request(
            method, path, json={}, headers={"Authorization": f"Bearer {revoked}"}
        )
        assert response.status_code == 401, (method, path)

    assert client.get("/api/datasets").status_code == 200
    assert client.get("/api/nlp-tasks").status_code == 200
    assert client.get("/api/datasets/ds-plain-ner").status_code == 200
    budget.check()
