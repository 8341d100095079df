"""Content-addressed JSON cache for batch command results.

Keys embed an operation name, a cache format version, and the canonical
input strings, so version bumps simply orphan old entries.  Entries that
fail to re-parse or whose stored key disagrees are treated as corrupt:
a warning is emitted and the value is recomputed, never trusted.
"""

import hashlib
import json
import os
import warnings
from pathlib import Path

from .errors import CacheCorrupt

CACHE_VERSION = 1


def default_cache_dir():
    env = os.environ.get("REPSTAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "repstab"


class DiskCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else default_cache_dir()

    def _path(self, key):
        digest = hashlib.sha256(key.encode()).hexdigest()
        return self.directory / f"{digest}.json"

    def get(self, key):
        path = self._path(key)
        if not path.exists():
            return None
        try:
            with open(path) as fh:
                blob = json.load(fh)
            if blob.get("key") != key:
                raise ValueError("key mismatch")
            return blob["payload"]
        except (ValueError, KeyError, json.JSONDecodeError, OSError):
            warnings.warn(f"corrupt cache entry for {key!r}; recomputing",
                          CacheCorrupt)
            return None

    def put(self, key, payload):
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(key)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump({"key": key, "payload": payload}, fh, sort_keys=True)
        os.replace(tmp, path)

    def entries(self):
        if not self.directory.exists():
            return []
        out = []
        for path in sorted(self.directory.glob("*.json")):
            try:
                with open(path) as fh:
                    blob = json.load(fh)
                out.append((blob.get("key", "<corrupt>"),
                            path.stat().st_size))
            except (json.JSONDecodeError, OSError):
                out.append(("<corrupt>", path.stat().st_size))
        return out


def cache_key(command, *parts):
    canon = ":".join(str(p) for p in parts)
    return f"{command}:v{CACHE_VERSION}:{canon}"
