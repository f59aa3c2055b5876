"""Configuration resolution with per-field provenance.

Settings come from four layers, highest precedence first: command-line
flag, environment variable, config file, built-in default. The resolved
configuration records which layer supplied each field, so an operator can
always answer "where did this number come from".

The config file is flat ``key = value`` text (``#`` starts a comment).
Keys are the field names of ModelParams and HousingStock plus:

    store_path      path of the price store CSV
    cache_dir       feed cache directory
    bind            host:port for the API service
    split_date      war-start split for pre/post statistics (YYYY-MM-DD)
    feed_kind       http | file | fixture
    feed_location   URL, path, or fixture name
    feed_format     csv | json
    cache_ttl       seconds a cached feed body stays fresh
    cors_origins    comma-separated allowed origins for the API
    ui_dir          directory of built UI assets served at /

Environment overrides: GASTAB_CONFIG (config file path), GASTAB_FEED_URL
(feed_location), GASTAB_STORE (store_path), GASTAB_BIND (bind).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from datetime import date
from pathlib import Path
from typing import Mapping

from .fetch import DEFAULT_FIXTURE, FeedSource
from .model import HousingStock, ModelParams
from .money import D

DEFAULT_SPLIT_DATE = date(2022, 2, 24)

ENV_OVERRIDES = {
    "GASTAB_FEED_URL": "feed_location",
    "GASTAB_STORE": "store_path",
    "GASTAB_BIND": "bind",
}

_PARAM_KEYS = tuple(f.name for f in fields(ModelParams))
_STOCK_KEYS = tuple(f.name for f in fields(HousingStock))
_PLAIN_KEYS = (
    "store_path",
    "cache_dir",
    "bind",
    "split_date",
    "feed_kind",
    "feed_location",
    "feed_format",
    "cache_ttl",
    "cors_origins",
    "ui_dir",
)
KNOWN_KEYS = frozenset(_PARAM_KEYS + _STOCK_KEYS + _PLAIN_KEYS)

DEFAULTS = {
    "store_path": "prices.csv",
    "cache_dir": ".gastab_cache",
    "bind": "127.0.0.1:8000",
    "split_date": DEFAULT_SPLIT_DATE.isoformat(),
    "feed_kind": "fixture",
    "feed_location": DEFAULT_FIXTURE,
    "feed_format": "csv",
    "cache_ttl": "0",
    "cors_origins": "*",
    "ui_dir": "",
}


class ConfigError(ValueError):
    """The configuration file or an override value is unusable."""


@dataclass
class CliConfig:
    params: ModelParams
    stock: HousingStock
    feed: FeedSource
    store_path: Path
    cache_dir: Path
    bind: str
    split_date: date
    cors_origins: list[str]
    ui_dir: Path | None
    provenance: dict[str, str] = field(default_factory=dict)


def parse_config_file(path: Path | str) -> dict[str, str]:
    """Parse flat ``key = value`` lines, rejecting unknown keys."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def resolve_config(
    flags: Mapping[str, object] | None = None,
    env: Mapping[str, str] | None = None,
    config_path: Path | str | None = None,
) -> CliConfig:
    """Merge the four layers into a CliConfig, recording provenance.

    ``flags`` maps config keys to values (None means "flag not given").
    ``config_path`` defaults to $GASTAB_CONFIG when set.
    """
    flags = {k: v for k, v in (flags or {}).items() if v is not None}
    env = os.environ if env is None else env

    if config_path is None and env.get("GASTAB_CONFIG"):
        config_path = env["GASTAB_CONFIG"]
    file_values = parse_config_file(config_path) if config_path else {}

    env_values = {
        key: env[var] for var, key in ENV_OVERRIDES.items() if env.get(var)
    }

    resolved: dict[str, str] = {}
    provenance: dict[str, str] = {}
    for key in KNOWN_KEYS:
        if key in flags:
            resolved[key] = str(flags[key])
            provenance[key] = "flag"
        elif key in env_values:
            resolved[key] = env_values[key]
            provenance[key] = "environment"
        elif key in file_values:
            resolved[key] = file_values[key]
            provenance[key] = "config"
        else:
            provenance[key] = "default"

    try:
        params = ModelParams(
            **{k: D(resolved[k]) for k in _PARAM_KEYS if k in resolved}
        )
        stock_kwargs: dict[str, object] = {}
        if "n_apartments" in resolved:
            stock_kwargs["n_apartments"] = int(resolved["n_apartments"])
        for key in ("avg_area_m2", "gas_heating_share"):
            if key in resolved:
                stock_kwargs[key] = D(resolved[key])
        stock = HousingStock(**stock_kwargs)

        def setting(key: str) -> str:
            return resolved.get(key, DEFAULTS[key])

        feed = FeedSource(
            kind=setting("feed_kind"),  # type: ignore[arg-type]
            location=setting("feed_location"),
            format=setting("feed_format"),  # type: ignore[arg-type]
            cache_ttl=int(setting("cache_ttl")),
        )
        split = date.fromisoformat(setting("split_date"))
    except (ValueError, ArithmeticError) as exc:
        raise ConfigError(str(exc)) from None

    origins = [o.strip() for o in setting("cors_origins").split(",") if o.strip()]
    ui_dir = setting("ui_dir")
    return CliConfig(
        params=params,
        stock=stock,
        feed=feed,
        store_path=Path(setting("store_path")),
        cache_dir=Path(setting("cache_dir")),
        bind=setting("bind"),
        split_date=split,
        cors_origins=origins,
        ui_dir=Path(ui_dir) if ui_dir else None,
        provenance=provenance,
    )
