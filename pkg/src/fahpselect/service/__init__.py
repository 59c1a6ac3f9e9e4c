"""Workflow service: project state machine, persistence, audit and the web API."""

from .audit import AuditLog, AuditRecord, payload_digest
from .store import DocumentStore, FileStore, MemoryStore
from .workflow import ACTIONS, Project, ProjectEngine, WorkflowState
from .reports import consistency_text, financial_text, ranking_text, case_study_text

__all__ = [
    "AuditLog",
    "AuditRecord",
    "payload_digest",
    "DocumentStore",
    "FileStore",
    "MemoryStore",
    "ACTIONS",
    "Project",
    "ProjectEngine",
    "WorkflowState",
    "consistency_text",
    "ranking_text",
    "financial_text",
    "case_study_text",
]
