"""Shared fixtures: a fresh store, an app client, tokens, and seed data."""

import json
import threading
import time

import pytest
import uvicorn
from fastapi.testclient import TestClient

from ptcatalog.service.app import create_app
from ptcatalog.service.store import RegistryStore

ADMIN_SECRET = "test-admin-secret"


class LiveServer:
    """A uvicorn instance on an ephemeral port, run in a background thread."""

    def __init__(self, app):
        config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
        self.server = uvicorn.Server(config)
        self.thread = threading.Thread(target=self.server.run, daemon=True)
        self.base_url = ""

    def start(self) -> "LiveServer":
        self.thread.start()
        deadline = time.monotonic() + 10
        while not self.server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server did not start in time")
            time.sleep(0.01)
        port = self.server.servers[0].sockets[0].getsockname()[1]
        self.base_url = f"http://127.0.0.1:{port}"
        return self

    def stop(self) -> None:
        self.server.should_exit = True
        self.thread.join(timeout=5)

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        _acceptance_results[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _acceptance_results.items():
        terminalreporter.write_line(f"ACCEPTANCE {name}: {outcome}")


@pytest.fixture
def store(tmp_path):
    return RegistryStore(tmp_path / "store.json", ADMIN_SECRET)


@pytest.fixture
def client(store):
    return TestClient(create_app(store))


@pytest.fixture
def token(client):
    response = client.post(
        "/api/tokens", json={"label": "tests", "admin_secret": ADMIN_SECRET}
    )
    assert response.status_code == 201
    return response.json()["token"]


@pytest.fixture
def auth(token):
    return {"Authorization": f"Bearer {token}"}


NER_TASK = {
    "id": "task-ner",
    "name": "Named Entity Recognition",
    "acronym": "NER",
    "papers_with_code_ids": ["named-entity-recognition"],
}

SENTIMENT_TASK = {
    "id": "task-sa",
    "name": "Sentiment Analysis",
    "acronym": "SA",
    "papers_with_code_ids": [],
}


def seed_fixture() -> dict:
    """Three datasets: two NER (one with a hosted copy), one sentiment."""
    return {
        "tasks": [NER_TASK, SENTIMENT_TASK],
        "datasets": [
            {
                "id": "ds-hosted-ner",
                "english_name": "Hosted NER Corpus",
                "native_name": "Corpus NER Alojado",
                "description": "Gold NER annotations with a hub copy.",
                "task_ids": ["task-ner"],
                "varieties": ["EUROPEAN_PT"],
                "links": [
                    {"kind": "HOMEPAGE", "url": "https://example.org/hosted-ner"},
                    {"kind": "HOSTED_COPY", "url": "https://hub.example.org/hosted-ner"},
                ],
                "license": "MIT",
                "year": 2021,
            },
            {
                "id": "ds-plain-ner",
                "english_name": "Plain NER Corpus",
                "task_ids": ["task-ner"],
                "varieties": ["BRAZILIAN_PT"],
                "links": [
                    {"kind": "HOMEPAGE", "url": "https://example.org/plain-ner", "alive": "DEAD"}
                ],
                "license": "GPL-3.0",
                "year": 2015,
            },
            {
                "id": "ds-sentiment",
                "english_name": "Sentiment Tweets",
                "task_ids": ["task-sa"],
                "varieties": ["BRAZILIAN_PT", "EUROPEAN_PT"],
                "links": [],
                "year": 2018,
            },
        ],
    }


@pytest.fixture
def seeded_store(store):
    store.seed_from_fixture(seed_fixture())
    return store


@pytest.fixture
def seeded_client(seeded_store):
    return TestClient(create_app(seeded_store))


def write_fixture_file(tmp_path, data=None):
    path = tmp_path / "fixture.json"
    path.write_text(json.dumps(data if data is not None else seed_fixture()))
    return path


@pytest.fixture
def live_registry(seeded_store):
    server = LiveServer(create_app(seeded_store)).start()
    yield server
    server.stop()
