"""Content-addressed on-disk cache for expensive polynomial objects.

Entries are JSON files keyed by (object kind, parameters, artifact version);
writes go through a temp file plus atomic rename, reads validate a sha256
checksum.  A corrupt entry is treated as a miss: the caller recomputes and
overwrites.  The location comes from, in order: an explicit path, the
QUADMOD_CACHE_DIR environment variable, or ./.quadmod-cache/.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__

ENV_VAR = "QUADMOD_CACHE_DIR"
DEFAULT_DIR = ".quadmod-cache"


class DiskCache:
    def __init__(self, root=None, version: str | None = None):
        if root is None:
            root = os.environ.get(ENV_VAR) or DEFAULT_DIR
        self.root = Path(root)
        # resolved late so a bumped artifact version invalidates old keys
        self.version = version if version is not None else globals()["__version__"]
        self.last_outcome = None  # "hit" | "miss" | "corrupt" (most recent get)

    def key(self, kind: str, **params) -> str:
        bits = [kind] + [f"{k}{params[k]}" for k in sorted(params)]
        bits.append(f"v{self.version}")
        return "-".join(str(b) for b in bits)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    @staticmethod
    def _digest(payload) -> str:
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key: str):
        """The stored payload, or None on miss or checksum mismatch."""
        path = self._path(key)
        self.last_outcome = "miss"
        if not path.exists():
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                entry = json.load(fh)
            if entry.get("key") != key:
                raise ValueError("key mismatch")
            if self._digest(entry["payload"]) != entry.get("sha256"):
                raise ValueError("checksum mismatch")
        except (ValueError, KeyError, json.JSONDecodeError):
            self.last_outcome = "corrupt"
            return None
        self.last_outcome = "hit"
        return entry["payload"]

    def put(self, key: str, payload) -> None:
        """Atomic write: temp file in the same directory, then rename."""
        self.root.mkdir(parents=True, exist_ok=True)
        entry = {"key": key, "sha256": self._digest(payload), "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
