"""Settings resolution for the admin CLI.

Precedence per setting: command-line flag, then environment variable, then
the user config file, then the built-in default. The config file is a flat
TOML-style key/value file (one `key = "value"` per line) at
<user config dir>/ptcatalog/config.toml.
"""

from __future__ import annotations

import os
from pathlib import Path

import click

URL_ENV = "PTCATALOG_URL"
TOKEN_ENV = "PTCATALOG_TOKEN"
DEFAULT_URL = "http://127.0.0.1:8000"


def config_file_path() -> Path:
    return Path(click.get_app_dir("ptcatalog")) / "config.toml"


def read_flat_config(path: str | Path) -> dict[str, str]:
    """Parse `key = "value"` lines; comments and blank lines ignored."""
    values: dict[str, str] = {}
    path = Path(path)
    if not path.exists():
        return values
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or "=" not in line:
            continue
        key, _, value = line.partition("=")
        value = value.strip().strip('"').strip("'")
        values[key.strip()] = value
    return values


def resolve_settings(
    url_flag: str | None, token_flag: str | None, config_path: str | Path | None = None
) -> tuple[str, str]:
    """Return (url, token); either may come from flag, env, or config file."""
    config = read_flat_config(config_path or config_file_path())
    url = url_flag or os.environ.get(URL_ENV) or config.get("url") or DEFAULT_URL
    token = token_flag or os.environ.get(TOKEN_ENV) or config.get("token") or ""
    return url, token
