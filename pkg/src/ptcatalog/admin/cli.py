"""The ptcatalog-admin command-line tool.

Exit codes are a stable scripting contract:
    0  success
    1  validation failure, conflict, or missing record
    2  authentication failure
    3  transport failure (endpoint unreachable)
"""

from __future__ import annotations

import functools
import json
import os
import sys
from pathlib import Path

import click

from ptcatalog.admin import api
from ptcatalog.admin.config import resolve_settings
from ptcatalog.admin.session import AdminSession
from ptcatalog.core.model import Dataset
from ptcatalog.errors import (
    ApiError,
    AuthError,
    ConflictError,
    NotFoundError,
    RemoteValidationError,
    TransportError,
)
from ptcatalog.pwc import ExternalCredentials, SyncLedger, login, sync_insert
from ptcatalog.rating import RatingConfig, probe_links
from ptcatalog.rating.features import extract_features, recorded_probes
from ptcatalog.rating.tree import predict_rating

PWC_PASSWORD_ENV = "PTCATALOG_PWC_PASSWORD"

EXIT_USER_ERROR = 1
EXIT_AUTH = 2
EXIT_TRANSPORT = 3


def handles_errors(func):
    """Translate typed client errors into the exit-code contract."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except RemoteValidationError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            for violation in exc.violations:
                click.echo(f"  {violation['field']}: {violation['message']}", err=True)
            sys.exit(EXIT_USER_ERROR)
        except (ConflictError, NotFoundError) as exc:
            click.echo(f"error: {exc.detail}", err=True)
            sys.exit(EXIT_USER_ERROR)
        except AuthError as exc:
            click.echo(f"error: {exc.detail}", err=True)
            sys.exit(EXIT_AUTH)
        except TransportError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_TRANSPORT)
        except ApiError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USER_ERROR)

    return wrapper


def emit(document) -> None:
    click.echo(json.dumps(document, indent=2))


@click.group()
@click.option("--url", default=None, help="Registry base URL.")
@click.option("--token", default=None, help="Bearer token for mutations.")
@click.pass_context
def main(ctx, url, token):
    """Manage the catalog registry from the command line."""
    resolved_url, resolved_token = resolve_settings(url, token)
    ctx.obj = AdminSession(base_url=resolved_url, bearer_token=resolved_token)


# ----------------------------------------------------------------------
# tokens


@main.group()
def token():
    """Issue or revoke API tokens (requires the admin secret)."""


@token.command("issue")
@click.option("--label", required=True)
@click.option("--admin-secret", envvar="PTCATALOG_ADMIN_SECRET", required=True)
@click.pass_obj
@handles_errors
def token_issue(session, label, admin_secret):
    emit(api.issue_token(session, label, admin_secret).to_dict())


@token.command("revoke")
@click.argument("token_value")
@click.option("--admin-secret", envvar="PTCATALOG_ADMIN_SECRET", required=True)
@click.pass_obj
@handles_errors
def token_revoke(session, token_value, admin_secret):
    api.revoke_token(session, token_value, admin_secret)
    click.echo("revoked", err=True)


# ----------------------------------------------------------------------
# tasks


@main.group()
def task():
    """Manage NLP task records."""


@task.command("insert")
@click.option("--name", default=None)
@click.option("--acronym", default=None)
@click.option("--pwc-id", "pwc_ids", multiple=True, help="External catalog slug (repeatable).")
@click.option("--json", "json_file", type=click.Path(exists=True), default=None)
@click.pass_obj
@handles_errors
def task_insert(session, name, acronym, pwc_ids, json_file):
    if json_file:
        payload = json.loads(Path(json_file).read_text())
        name = payload.get("name")
        acronym = payload.get("acronym")
        pwc_ids = payload.get("papers_with_code_ids", [])
    if not name or not acronym:
        raise click.UsageError("provide --name and --acronym, or --json FILE")
    created = api.insert_nlp_task(session, name, acronym, list(pwc_ids))
    emit(created.to_dict())


@task.command("list")
@click.pass_obj
@handles_errors
def task_list(session):
    emit([t.to_dict() for t in api.list_nlp_tasks(session)])


@task.command("delete")
@click.argument("task_id")
@click.pass_obj
@handles_errors
def task_delete(session, task_id):
    api.delete_nlp_task(session, task_id)
    click.echo("deleted", err=True)


# ----------------------------------------------------------------------
# datasets


@main.group()
def dataset():
    """Manage dataset records."""


@dataset.command("insert")
@click.option("--json", "json_file", type=click.Path(exists=True), required=True)
@click.pass_obj
@handles_errors
def dataset_insert(session, json_file):
    payload = json.loads(Path(json_file).read_text())
    emit(api.insert_dataset(session, payload).to_dict())


@dataset.command("show")
@click.argument("identifier")
@click.option("--by-name", is_flag=True, help="Treat the identifier as the english name.")
@click.pass_obj
@handles_errors
def dataset_show(session, identifier, by_name):
    if by_name:
        record = api.get_dataset_by_name(session, identifier)
    else:
        record = api.get_dataset(session, identifier)
    emit(record.to_dict())


@dataset.command("update")
@click.argument("dataset_id")
@click.option("--json", "json_file", type=click.Path(exists=True), required=True)
@click.option("--expected-revision", type=int, default=None)
@click.pass_obj
@handles_errors
def dataset_update(session, dataset_id, json_file, expected_revision):
    payload = json.loads(Path(json_file).read_text())
    emit(api.update_dataset(session, dataset_id, payload, expected_revision).to_dict())


@dataset.command("delete")
@click.argument("dataset_id")
@click.pass_obj
@handles_errors
def dataset_delete(session, dataset_id):
    api.delete_dataset(session, dataset_id)
    click.echo("deleted", err=True)


@dataset.command("list")
@click.option("--task", default=None)
@click.option("--variety", default=None)
@click.option("--policy", default=None)
@click.pass_obj
@handles_errors
def dataset_list(session, task, variety, policy):
    emit([d.to_dict() for d in api.list_datasets(session, task, variety, policy)])


# ----------------------------------------------------------------------
# rating


@main.command("rate")
@click.argument("dataset_file", type=click.Path(exists=True))
@click.option("--offline", is_flag=True, help="Skip probing; treat UNPROBED links as DEAD.")
@click.option("--rating-config", type=click.Path(exists=True), default=None)
@handles_errors
def rate(dataset_file, offline, rating_config):
    """Compute the preservation rating of a dataset JSON file."""
    from datetime import datetime, timezone

    config = RatingConfig.from_file(rating_config) if rating_config else RatingConfig()
    record = Dataset.from_dict(json.loads(Path(dataset_file).read_text()))
    if offline:
        probes = recorded_probes(record.links)
    else:
        probes = probe_links([l.url for l in record.links], config=config)
    features = extract_features(record, probes, datetime.now(timezone.utc), config)
    rating = predict_rating(features)
    emit({"features": features.to_dict(), "rating": rating.to_dict()})


# ----------------------------------------------------------------------
# sync


@main.group()
def sync():
    """Push catalog records to external platforms."""


@sync.command("pwc")
@click.option("--endpoint", required=True, help="Base URL of the external catalog.")
@click.option("--username", required=True)
@click.option(
    "--ledger", "ledger_file", default="pwc_sync_ledger.json", show_default=True,
    help="Sync-ledger JSON file (kept next to the registry store in production).",
)
@click.option(
    "--dataset", "dataset_ids", multiple=True,
    help="Dataset id to sync (repeatable); default is every dataset.",
)
@click.pass_obj
@handles_errors
def sync_pwc(session, endpoint, username, ledger_file, dataset_ids):
    """Publish dataset metadata to the external catalog (one-way push)."""
    password = os.environ.get(PWC_PASSWORD_ENV)
    if not password:
        raise click.UsageError(f"set {PWC_PASSWORD_ENV} with the external password")

    if dataset_ids:
        records = [api.get_dataset(session, ds_id) for ds_id in dataset_ids]
    else:
        records = api.list_datasets(session)

    ledger = SyncLedger(ledger_file)
    external = login(ExternalCredentials(username, password), endpoint)
    results = []
    for record in records:
        external_id, ledger = sync_insert(external, record, ledger)
        ledger.save()
        results.append({"dataset_id": record.id, "external_id": external_id})
    emit(results)


if __name__ == "__main__":
    main()
