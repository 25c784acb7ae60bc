"""Thin authenticated wrappers over the registry endpoints.

Every function is one HTTP call; service errors surface as the typed
exceptions from ptcatalog.errors (auth, conflict, validation, not-found,
transport).
"""

from __future__ import annotations

from typing import Any

import httpx

from ptcatalog.admin.session import AdminSession
from ptcatalog.core.model import ApiToken, Dataset, NLPTask
from ptcatalog.errors import TransportError, raise_for_response
from ptcatalog.service.app import REVISION_HEADER

DEFAULT_TIMEOUT = 10.0


def _request(
    session: AdminSession,
    method: str,
    path: str,
    json: Any = None,
    params: dict | None = None,
    headers: dict | None = None,
    authed: bool = True,
) -> httpx.Response:
    url = session.base_url + path
    merged = dict(session.auth_headers) if authed else {}
    if headers:
        merged.update(headers)
    try:
        if session.http is not None:
            response = session.http.request(method, url, json=json, params=params, headers=merged)
        else:
            response = httpx.request(
                method, url, json=json, params=params, headers=merged, timeout=DEFAULT_TIMEOUT
            )
    except httpx.HTTPError as exc:
        raise TransportError(url, exc) from exc
    raise_for_response(response)
    return response


# ----------------------------------------------------------------------
# tokens

def issue_token(session: AdminSession, label: str, admin_secret: str) -> ApiToken:
    response = _request(
        session, "POST", "/api/tokens",
        json={"label": label, "admin_secret": admin_secret}, authed=False,
    )
    return ApiToken.from_dict(response.json())


def revoke_token(session: AdminSession, token_value: str, admin_secret: str) -> None:
    _request(
        session, "DELETE", f"/api/tokens/{token_value}",
        headers={"X-Admin-Secret": admin_secret}, authed=False,
    )


# ----------------------------------------------------------------------
# NLP tasks

def insert_nlp_task(
    session: AdminSession,
    name: str,
    acronym: str,
    papers_with_code_ids: list[str] | None = None,
) -> NLPTask:
    payload = {
        "name": name,
        "acronym": acronym,
        "papers_with_code_ids": papers_with_code_ids or [],
    }
    response = _request(session, "POST", "/api/nlp-tasks", json=payload)
    return NLPTask.from_dict(response.json())


def list_nlp_tasks(session: AdminSession) -> list[NLPTask]:
    response = _request(session, "GET", "/api/nlp-tasks", authed=False)
    return [NLPTask.from_dict(doc) for doc in response.json()]


def delete_nlp_task(session: AdminSession, task_id: str) -> None:
    _request(session, "DELETE", f"/api/nlp-tasks/{task_id}")


# ----------------------------------------------------------------------
# datasets

def insert_dataset(session: AdminSession, payload: dict[str, Any]) -> Dataset:
    response = _request(session, "POST", "/api/datasets", json=payload)
    return Dataset.from_dict(response.json())


def get_dataset(session: AdminSession, dataset_id: str) -> Dataset:
    response = _request(session, "GET", f"/api/datasets/{dataset_id}", authed=False)
    return Dataset.from_dict(response.json())


def get_dataset_by_name(session: AdminSession, english_name: str) -> Dataset:
    response = _request(session, "GET", f"/api/datasets/by-name/{english_name}", authed=False)
    return Dataset.from_dict(response.json())


def update_dataset(
    session: AdminSession,
    dataset_id: str,
    payload: dict[str, Any],
    expected_revision: int | None = None,
) -> Dataset:
    headers = {}
    if expected_revision is not None:
        headers[REVISION_HEADER] = str(expected_revision)
    response = _request(
        session, "PUT", f"/api/datasets/{dataset_id}", json=payload, headers=headers
    )
    return Dataset.from_dict(response.json())


def delete_dataset(session: AdminSession, dataset_id: str) -> None:
    _request(session, "DELETE", f"/api/datasets/{dataset_id}")


def list_datasets(
    session: AdminSession,
    task: str | None = None,
    variety: str | None = None,
    policy: str | None = None,
) -> list[Dataset]:
    params = {
        key: value
        for key, value in (("task", task), ("variety", variety), ("policy", policy))
        if value is not None
    }
    response = _request(session, "GET", "/api/datasets", params=params, authed=False)
    return [Dataset.from_dict(doc) for doc in response.json()]
