"""Content-addressed JSON cache for CLI results."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def default_cache_dir() -> Path:
    env = os.environ.get("ZONODT_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "zonodt"


class ResultCache:
    """One ``<key>.json`` file per job.  IO problems turn the cache off with a warning."""

    def __init__(self, directory: Path | str | None, version: str, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.version = version
        self.enabled = enabled
        self.hits = 0

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("cache read failed (%s); continuing without cache", exc)
            self.enabled = False
            return None
        try:
            entry = json.loads(text)
        except json.JSONDecodeError:
            log.warning("cache entry %s is corrupted; recomputing", path.name)
            return None
        if not isinstance(entry, dict) or entry.get("version") != self.version or entry.get("input_hash") != key:
            return None
        self.hits += 1
        return entry

    def put(self, key: str, envelope: dict) -> None:
        if not self.enabled:
            return
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp = self._path(key).with_suffix(f".tmp{os.getpid()}")
            tmp.write_text(canonical_json(envelope), encoding="utf-8")
            os.replace(tmp, self._path(key))
        except OSError as exc:
            log.warning("cache write failed (%s); continuing without cache", exc)
            self.enabled = False
