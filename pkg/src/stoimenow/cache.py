"""On-disk cache of enumerated object lists, keyed by (structure, n, avoid)."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "STOIMENOW_CACHE_DIR"


def cache_dir(explicit: str | None = None) -> Path | None:
    """The directory from ``explicit``, else from the environment, else ``None`` (caching off)."""
    raw = explicit or os.environ.get(ENV_VAR)
    return Path(raw) if raw else None


class ObjectCache:
    def __init__(self, root: Path):
        self.root = root

    def _path(self, structure: str, n: int, avoid: str | None) -> Path:
        key = json.dumps([structure, n, avoid])
        digest = hashlib.sha256(key.encode()).hexdigest()[:16]
        return self.root / f"{structure}-n{n}-{digest}.json"

    def load(self, structure: str, n: int, avoid: str | None) -> list[str] | None:
        path = self._path(structure, n, avoid)
        if not path.exists():
            return None
        data = json.loads(path.read_text())
        if data.get("key") != [structure, n, avoid]:
            return None
        return data["objects"]

    def store(self, structure: str, n: int, avoid: str | None, objects: list[str]) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        path = self._path(structure, n, avoid)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": [structure, n, avoid], "objects": objects}))
        tmp.replace(path)
