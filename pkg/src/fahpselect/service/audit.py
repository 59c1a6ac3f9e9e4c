"""Append-only audit trail for project mutations.

Every successful mutation appends exactly one record.  Records carry the
full action payload next to its digest, so the log doubles as an event
journal: replaying the actions from an empty store must rebuild the same
project state.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Iterator


def canonical_json(payload: dict[str, Any]) -> str:
    """Serialize a payload with a stable key order and separators."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def payload_digest(payload: dict[str, Any]) -> str:
    """SHA-256 hex digest of the canonical payload serialization."""
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


@dataclass(frozen=True, slots=True)
class AuditRecord:
    """One recorded mutation: who did what, and the state edge it caused."""

    sequence: int
    timestamp: str
    actor: str
    action: str
    payload: dict[str, Any]
    digest: str
    prior_state: str
    next_state: str

    def as_dict(self) -> dict[str, Any]:
        return {
            "sequence": self.sequence,
            "timestamp": self.timestamp,
            "actor": self.actor,
            "action": self.action,
            "payload": self.payload,
            "digest": self.digest,
            "prior_state": self.prior_state,
            "next_state": self.next_state,
        }

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "AuditRecord":
        return cls(
            sequence=int(doc["sequence"]),
            timestamp=str(doc["timestamp"]),
            actor=str(doc["actor"]),
            action=str(doc["action"]),
            payload=dict(doc["payload"]),
            digest=str(doc["digest"]),
            prior_state=str(doc["prior_state"]),
            next_state=str(doc["next_state"]),
        )


class AuditLog:
    """Totally ordered, append-only sequence of audit records."""

    def __init__(self, records: list[AuditRecord] | None = None) -> None:
        self._records: list[AuditRecord] = list(records or [])
        for position, record in enumerate(self._records):
            if record.sequence != position:
                raise ValueError(f"audit sequence gap at position {position}")

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[AuditRecord]:
        return iter(self._records)

    def __getitem__(self, index: int) -> AuditRecord:
        return self._records[index]

    def append(
        self,
        *,
        timestamp: str,
        actor: str,
        action: str,
        payload: dict[str, Any],
        prior_state: str,
        next_state: str,
    ) -> AuditRecord:
        record = AuditRecord(
            sequence=len(self._records),
            timestamp=timestamp,
            actor=actor,
            action=action,
            payload=dict(payload),
            digest=payload_digest(payload),
            prior_state=prior_state,
            next_state=next_state,
        )
        self._records.append(record)
        return record

    def verify(self) -> bool:
        """Check digests and sequence continuity over the whole log."""
        for position, record in enumerate(self._records):
            if record.sequence != position:
                return False
            if record.digest != payload_digest(record.payload):
                return False
        return True

    def as_list(self) -> list[dict[str, Any]]:
        return [record.as_dict() for record in self._records]

    @classmethod
    def from_list(cls, docs: list[dict[str, Any]]) -> "AuditLog":
        return cls([AuditRecord.from_dict(doc) for doc in docs])
