"""DOI metadata resolution with an on-disk cache.

The network client talks to the Crossref works endpoint; the cache decorator
stores one JSON file per DOI (filename = percent-encoded DOI) and can run
fully offline, serving only cache hits. Tests never touch the network: any
object with a fetch(doi) method works as the inner resolver.
"""

from __future__ import annotations

import json
import threading
import urllib.parse
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Protocol

import requests

from .errors import ResolutionError, ValidationError


@dataclass(frozen=True)
class PaperMetadata:
    title: str
    authors: tuple[str, ...]
    year: Optional[int]
    doi: str


class Resolver(Protocol):
    def fetch(self, doi: str) -> PaperMetadata: ...


def validate_doi(doi: str) -> str:
    if not doi or not doi.startswith("10."):
        raise ValidationError(f"malformed DOI: {doi!r}")
    return doi


class CrossrefClient:
    """Thin client for https://api.crossref.org/works/{doi}."""

    def __init__(self, base_url: str = "https://api.crossref.org/works", session=None):
        self._base_url = base_url.rstrip("/")
        self._session = session or requests.Session()

    def fetch(self, doi: str) -> PaperMetadata:
        validate_doi(doi)
        url = f"{self._base_url}/{urllib.parse.quote(doi, safe='')}"
        try:
            response = self._session.get(url, timeout=30)
            response.raise_for_status()
            message = response.json()["message"]
        except Exception as exc:
            raise ResolutionError(doi, f"Crossref lookup failed for {doi}: {exc}") from exc
        title = (message.get("title") or [""])[0]
        authors = tuple(
            " ".join(filter(None, [a.get("given"), a.get("family")]))
            for a in message.get("author", [])
        )
        year = None
        issued = message.get("issued", {}).get("date-parts", [[None]])
        if issued and issued[0] and issued[0][0]:
            year = int(issued[0][0])
        return PaperMetadata(title=title, authors=authors, year=year, doi=doi)


class CachedResolver:
    """File-cache decorator over a resolver; optional offline mode.

    Concurrent readers are fine; writes go through a lock and a
    write-temp-then-rename so a cache file is never seen half-written.
    """

    def __init__(self, inner: Resolver | None, cache_dir: str | Path, offline: bool = False):
        self._inner = inner
        self._dir = Path(cache_dir)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._offline = offline
        self._lock = threading.Lock()

    def _path(self, doi: str) -> Path:
        return self._dir / (urllib.parse.quote(doi, safe="") + ".json")

    def fetch(self, doi: str) -> PaperMetadata:
        validate_doi(doi)
        path = self._path(doi)
        if path.exists():
            data = json.loads(path.read_text(encoding="utf-8"))
            return PaperMetadata(
                title=data["title"],
                authors=tuple(data["authors"]),
                year=data["year"],
                doi=data["doi"],
            )
        if self._offline or self._inner is None:
            raise ResolutionError(doi, f"offline and no cached metadata for DOI {doi}")
        metadata = self._inner.fetch(doi)
        with self._lock:
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(asdict(metadata), ensure_ascii=False), encoding="utf-8")
            tmp.replace(path)
        return metadata
