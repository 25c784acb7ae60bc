"""Entry point of the registry service."""

from __future__ import annotations

import json
import logging
from pathlib import Path

import click
import uvicorn

from ptcatalog.rating import RatingConfig
from ptcatalog.service.app import create_app
from ptcatalog.service.store import RegistryStore


@click.command()
@click.option(
    "--listen", envvar="PTCATALOG_LISTEN", default="127.0.0.1:8000",
    show_default=True, help="host:port to bind.",
)
@click.option(
    "--store", "store_path", envvar="PTCATALOG_STORE", default="ptcatalog_store.json",
    show_default=True, help="Path of the persistence file.",
)
@click.option(
    "--admin-secret", envvar="PTCATALOG_ADMIN_SECRET", required=True,
    help="Bootstrap secret that authorizes token issuance.",
)
@click.option(
    "--seed", "seed_path", type=click.Path(exists=True), default=None,
    help="Seed fixture (JSON of datasets and tasks) loaded before serving.",
)
@click.option(
    "--rating-config", "rating_config_path", envvar="PTCATALOG_RATING_CONFIG",
    type=click.Path(exists=True), default=None,
    help="JSON file overriding rating-engine defaults.",
)
def main(listen, store_path, admin_secret, seed_path, rating_config_path):
    """Serve the catalog registry API."""
    logging.basicConfig(level=logging.INFO)
    rating_config = (
        RatingConfig.from_file(rating_config_path) if rating_config_path else RatingConfig()
    )
    store = RegistryStore(store_path, admin_secret, rating_config)
    if seed_path:
        fixture = json.loads(Path(seed_path).read_text())
        store.seed_from_fixture(fixture)

    host, _, port = listen.rpartition(":")
    app = create_app(store)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="warning")


if __name__ == "__main__":
    main()
