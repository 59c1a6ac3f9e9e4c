"""Pluggable project persistence.

Only the audit log is stored; project state is rebuilt by replaying it.
That keeps a single source of truth and makes every load a replay check.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, Protocol


class DocumentStore(Protocol):
    """Minimal key-document contract the service needs."""

    def save(self, project_id: str, doc: dict[str, Any]) -> None: ...

    def load(self, project_id: str) -> dict[str, Any] | None: ...

    def list_ids(self) -> list[str]: ...


class MemoryStore:
    """In-process store for tests and ephemeral runs."""

    def __init__(self) -> None:
        self._docs: dict[str, dict[str, Any]] = {}

    def save(self, project_id: str, doc: dict[str, Any]) -> None:
        # Round-trip through JSON so memory and file stores behave identically.
        self._docs[project_id] = json.loads(json.dumps(doc))

    def load(self, project_id: str) -> dict[str, Any] | None:
        doc = self._docs.get(project_id)
        return json.loads(json.dumps(doc)) if doc is not None else None

    def list_ids(self) -> list[str]:
        return sorted(self._docs)


class FileStore:
    """One JSON file per project under a base directory; writes are atomic."""

    def __init__(self, base_path: str | os.PathLike[str]) -> None:
        self.base = Path(base_path)
        self.base.mkdir(parents=True, exist_ok=True)

    def _path(self, project_id: str) -> Path:
        safe = project_id.replace("/", "_").replace("\\", "_")
        return self.base / f"{safe}.json"

    def save(self, project_id: str, doc: dict[str, Any]) -> None:
        payload = json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)
        fd, tmp_name = tempfile.mkstemp(dir=self.base, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
            os.replace(tmp_name, self._path(project_id))
        finally:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)

    def load(self, project_id: str) -> dict[str, Any] | None:
        path = self._path(project_id)
        if not path.exists():
            return None
        with path.open(encoding="utf-8") as handle:
            return json.load(handle)

    def list_ids(self) -> list[str]:
        return sorted(path.stem for path in self.base.glob("*.json"))
