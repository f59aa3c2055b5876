"""Feed retrieval with a file cache and an offline fixture mode.

HTTP bodies are cached on disk, keyed by a stable hash of the source, with
a sidecar metadata file recording the fetch time (RFC 3339, UTC). When the
upstream is unreachable and only an expired cache entry exists, that entry
is returned with ``stale=True`` rather than failing: yesterday's price
still supports a useful estimate, and report layers surface the flag.

``file`` and ``fixture`` sources read straight from disk (fixtures resolve
inside the installed package) and never touch the cache or the network, so
fetching a fixture is a pure function of the fixture file contents.

The network transport is injected, which keeps every test offline. Feeds
with a non-canonical schema should be fetched raw and converted before
ingestion; the transport seam is the intended extension point.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Literal, Protocol
from urllib.parse import urlparse

logger = logging.getLogger(__name__)

SourceKind = Literal["http", "file", "fixture"]


class FetchError(RuntimeError):
    """The source could not be retrieved and no cached body was usable."""


class Transport(Protocol):
    def get(self, url: str) -> str:
        """Return the response body, raising FetchError on any failure."""


class UrllibTransport:
    """Minimal stdlib HTTP GET."""

    def __init__(self, timeout: float = 10.0):
        self.timeout = timeout

    def get(self, url: str) -> str:
        try:
            with urllib.request.urlopen(url, timeout=self.timeout) as response:
                if response.status != 200:
                    raise FetchError(f"unreachable: status {response.status}")
                return response.read().decode("utf-8")
        except urllib.error.HTTPError as exc:
            raise FetchError(f"unreachable: status {exc.code}") from None
        except urllib.error.URLError as exc:
            raise FetchError(f"unreachable: {exc.reason}") from None


@dataclass(frozen=True)
class FeedSource:
    """Where feed text comes from and how long a cached copy stays fresh."""

    kind: SourceKind
    location: str
    format: Literal["csv", "json"] = "csv"
    cache_ttl: int = 0

    def __post_init__(self) -> None:
        if self.cache_ttl < 0:
            raise ValueError("cache_ttl must be >= 0")
        if self.kind == "http":
            parsed = urlparse(self.location)
            if parsed.scheme not in ("http", "https") or not parsed.netloc:
                raise ValueError(f"http source needs an absolute URL, got {self.location!r}")
        elif self.kind not in ("file", "fixture"):
            raise ValueError(f"unknown source kind {self.kind!r}")


@dataclass(frozen=True)
class FetchResult:
    body: str
    origin: Literal["http", "cache", "file", "fixture"]
    fetched_at: datetime
    stale: bool = False


class FeedCache:
    """One body file plus one metadata sidecar per source, written atomically."""

    def __init__(self, directory: Path | str):
        self.directory = Path(directory)
        self._lock = threading.Lock()

    @staticmethod
    def key(source: FeedSource) -> str:
        digest = hashlib.sha256(f"{source.kind}\n{source.location}".encode("utf-8"))
        return digest.hexdigest()[:16]

    def _paths(self, source: FeedSource) -> tuple[Path, Path]:
        key = self.key(source)
        return self.directory / f"{key}.body", self.directory / f"{key}.meta.json"

    def get(self, source: FeedSource) -> tuple[str, datetime] | None:
        body_path, meta_path = self._paths(source)
        if not body_path.exists() or not meta_path.exists():
            return None
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
        fetched_at = datetime.fromisoformat(meta["fetched_at"])
        return body_path.read_text(encoding="utf-8"), fetched_at

    def put(self, source: FeedSource, body: str, fetched_at: datetime) -> None:
        with self._lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            body_path, meta_path = self._paths(source)
            meta = {
                "fetched_at": fetched_at.isoformat(),
                "kind": source.kind,
                "location": source.location,
            }
            for path, content in (
                (body_path, body),
                (meta_path, json.dumps(meta, indent=2) + "\n"),
            ):
                tmp = path.with_suffix(path.suffix + ".tmp")
                tmp.write_text(content, encoding="utf-8")
                os.replace(tmp, path)


def fixture_path(name: str) -> Path:
    """Resolve a fixture filename inside the installed package data."""
    return Path(str(resources.files("gastab").joinpath("data", name)))


DEFAULT_FIXTURE = "the_spot_2022.csv"


def fetch(
    source: FeedSource,
    now: datetime | None = None,
    *,
    transport: Transport | None = None,
    cache: FeedCache | None = None,
) -> FetchResult:
    """Retrieve raw feed text with provenance.

    HTTP sources serve from cache while the entry is younger than
    ``cache_ttl`` seconds; on upstream failure an expired entry is served
    with ``stale=True``, and FetchError is raised only when there is no
    cached body at all.
    """
    if now is None:
        now = datetime.now(timezone.utc)

    if source.kind == "fixture":
        path = fixture_path(source.location)
        if not path.exists():
            raise FetchError(f"unknown fixture {source.location!r}")
        return FetchResult(path.read_text(encoding="utf-8"), "fixture", now)

    if source.kind == "file":
        path = Path(source.location)
        if not path.exists():
            raise FetchError(f"no such file {source.location!r}")
        return FetchResult(path.read_text(encoding="utf-8"), "file", now)

    cached = cache.get(source) if cache is not None else None
    if cached is not None:
        body, fetched_at = cached
        age = (now - fetched_at).total_seconds()
        if age < source.cache_ttl:
            return FetchResult(body, "cache", fetched_at)

    if transport is None:
        transport = UrllibTransport()
    try:
        body = transport.get(source.location)
    except FetchError:
        if cached is not None:
            stale_body, fetched_at = cached
            logger.warning("serving stale cache for %s", source.location)
            return FetchResult(stale_body, "cache", fetched_at, stale=True)
        raise
    if cache is not None:
        cache.put(source, body, now)
    return FetchResult(body, "http", now)
