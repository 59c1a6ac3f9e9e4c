"""HTTP service exposing the project workflow.

Resource-oriented JSON API with bearer-token authentication.  Decision-maker
tokens are bound to their expert id; everything that steers the lifecycle
requires the admin role.  Judgments stay private to their author until the
technical ranking stage is reached.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable

from fastapi import Depends, FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .. import __version__
from ..consistency import DEFAULT_GAMMA
from ..errors import (
    BidFromScreenedOut,
    DuplicatePair,
    FahpError,
    IncompleteJudgments,
    InvalidHierarchy,
    InvalidThreshold,
    MissingBids,
    MissingBidSecurity,
    MissingPair,
    NoQualifiedBidders,
    UnknownContractor,
    UnknownDecisionMaker,
    UnknownElement,
    UnknownGrade,
    WrongState,
)
from ..financial import DEFAULT_SECURITY_THRESHOLD_MINOR
from .reports import consistency_text, financial_text, ranking_text
from .store import DocumentStore, MemoryStore
from .workflow import ProjectEngine, WorkflowState
from .audit import AuditLog

#: Workflow states from which ranking results and foreign judgments are visible.
RANKING_VISIBLE_STATES = {
    WorkflowState.TECHNICAL_RANKING,
    WorkflowState.SCREENING,
    WorkflowState.FINANCIAL_EVALUATION,
    WorkflowState.AWARDED,
}

ERROR_STATUS = {
    WrongState: 409,
    IncompleteJudgments: 409,
    NoQualifiedBidders: 409,
    MissingBids: 409,
    BidFromScreenedOut: 409,
    MissingBidSecurity: 400,
    UnknownContractor: 404,
    UnknownDecisionMaker: 404,
    UnknownElement: 404,
    UnknownGrade: 400,
    MissingPair: 400,
    DuplicatePair: 400,
    InvalidThreshold: 400,
    InvalidHierarchy: 400,
}


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class Principal:
    """Authenticated caller: admins steer projects, experts submit judgments."""

    name: str
    role: str  # "admin" | "decision_maker"

    @property
    def is_admin(self) -> bool:
        return self.role == "admin"


@dataclass
class ServiceConfig:
    store: DocumentStore = field(default_factory=MemoryStore)
    tokens: dict[str, Principal] = field(default_factory=dict)
    default_gamma: float = DEFAULT_GAMMA
    default_security_threshold_minor: int = DEFAULT_SECURITY_THRESHOLD_MINOR
    clock: Callable[[], str] = _utc_now
    # origins allowed to call the API from a browser; empty disables CORS
    cors_origins: tuple[str, ...] = ()


class ProjectRegistry:
    """Loads, caches and persists project engines; one writer per project."""

    def __init__(self, store: DocumentStore, clock: Callable[[], str]) -> None:
        self.store = store
        self.clock = clock
        self._engines: dict[str, ProjectEngine] = {}
        self._locks: dict[str, threading.RLock] = {}
        self._registry_lock = threading.Lock()

    def _lock_for(self, project_id: str) -> threading.RLock:
        with self._registry_lock:
            return self._locks.setdefault(project_id, threading.RLock())

    def _engine(self, project_id: str) -> ProjectEngine:
        engine = self._engines.get(project_id)
        if engine is not None:
            return engine
        doc = self.store.load(project_id)
        if doc is None:
            raise HTTPException(404, detail=f"no project {project_id!r}")
        engine = ProjectEngine.replay(AuditLog.from_list(doc["records"]))
        self._engines[project_id] = engine
        return engine

    def exists(self, project_id: str) -> bool:
        return project_id in self._engines or self.store.load(project_id) is not None

    def list_ids(self) -> list[str]:
        with self._registry_lock:
            cached = set(self._engines)
        return sorted(cached | set(self.store.list_ids()))

    def mutate(
        self, project_id: str, action: str, payload: dict[str, Any], actor: str
    ) -> dict[str, Any]:
        with self._lock_for(project_id):
            if action == "create_project":
                if self.exists(project_id):
                    raise HTTPException(409, detail=f"project {project_id!r} exists")
                engine = ProjectEngine()
                self._engines[project_id] = engine
            else:
                engine = self._engine(project_id)
            try:
                result = engine.apply(action, payload, actor, self.clock())
            except Exception:
                # a failed create must leave no trace, whatever the failure
                if action == "create_project":
                    self._engines.pop(project_id, None)
                raise
            self.store.save(project_id, {"records": engine.audit.as_list()})
            return result

    def read(self, project_id: str) -> ProjectEngine:
        with self._lock_for(project_id):
            return self._engine(project_id)


# -- request bodies ----------------------------------------------------------


class CreateProjectBody(BaseModel):
    project_id: str
    title: str = ""
    hierarchy: dict
    requirements: list[str] = []
    mandatory_requirements: list[str] = []
    gamma: float | None = None
    estimate: str
    security_threshold: str | None = None


class DossierBody(BaseModel):
    submitted: list[str] = []


class JudgmentEntryBody(BaseModel):
    row: str
    col: str
    grade: str
    inverted: bool = False


class JudgmentBody(BaseModel):
    entries: list[JudgmentEntryBody] = []


class BidBody(BaseModel):
    price: str
    security_document: str | None = None


class CancelBody(BaseModel):
    reason: str = ""


# -- application factory -----------------------------------------------------


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    registry = ProjectRegistry(config.store, config.clock)
    app = FastAPI(title="fahpselect", version=__version__)
    app.state.registry = registry
    app.state.config = config

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["*"],
            allow_headers=["Authorization", "Content-Type"],
        )

    def principal_of(request: Request) -> Principal:
        header = request.headers.get("authorization", "")
        scheme, _, token = header.partition(" ")
        if scheme.lower() != "bearer" or not token:
            raise HTTPException(401, detail="bearer token required")
        principal = config.tokens.get(token.strip())
        if principal is None:
            raise HTTPException(401, detail="unknown token")
        return principal

    def require_admin(principal: Principal = Depends(principal_of)) -> Principal:
        if not principal.is_admin:
            raise HTTPException(403, detail="admin role required")
        return principal

    @app.exception_handler(FahpError)
    async def domain_error(request: Request, exc: FahpError):
        from fastapi.responses import JSONResponse

        status = ERROR_STATUS.get(type(exc), 400)
        body: dict[str, Any] = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, IncompleteJudgments):
            body["missing"] = [
                {"decision_maker_id": dm, "context_id": ctx} for dm, ctx in exc.missing
            ]
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        from fastapi.responses import JSONResponse

        return JSONResponse(
            status_code=400, content={"error": "ValueError", "detail": str(exc)}
        )

    def snapshot_for(engine: ProjectEngine, principal: Principal) -> dict[str, Any]:
        doc = engine.project.as_dict()
        state = engine.project.state
        if not principal.is_admin and state not in RANKING_VISIBLE_STATES:
            doc["judgments"] = {
                dm: slots
                for dm, slots in doc["judgments"].items()
                if dm == principal.name
            }
            doc.pop("technical", None)
        return doc

    # -- health and discovery

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.get("/projects")
    def list_projects(principal: Principal = Depends(principal_of)):
        out = []
        for project_id in registry.list_ids():
            project = registry.read(project_id).project
            out.append(
                {
                    "project_id": project.project_id,
                    "title": project.title,
                    "state": project.state.value,
                }
            )
        return out

    @app.post("/projects", status_code=201)
    def create_project(
        body: CreateProjectBody, principal: Principal = Depends(require_admin)
    ):
        payload: dict[str, Any] = {
            "project_id": body.project_id,
            "title": body.title,
            "hierarchy": body.hierarchy,
            "requirements": body.requirements,
            "mandatory_requirements": body.mandatory_requirements,
            "gamma": body.gamma if body.gamma is not None else config.default_gamma,
            "estimate": body.estimate,
        }
        if body.security_threshold is not None:
            payload["security_threshold"] = body.security_threshold
        registry.mutate(body.project_id, "create_project", payload, principal.name)
        return snapshot_for(registry.read(body.project_id), principal)

    @app.get("/projects/{project_id}")
    def get_project(project_id: str, principal: Principal = Depends(principal_of)):
        return snapshot_for(registry.read(project_id), principal)

    @app.get("/projects/{project_id}/decision-makers")
    def decision_makers(project_id: str, principal: Principal = Depends(principal_of)):
        project = registry.read(project_id).project
        return list(project.hierarchy.decision_makers)

    @app.get("/projects/{project_id}/contexts")
    def contexts(project_id: str, principal: Principal = Depends(principal_of)):
        project = registry.read(project_id).project
        return [
            {"context_id": ctx.context_id, "labels": list(ctx.labels)}
            for ctx in project.contexts()
        ]

    @app.get("/projects/{project_id}/bidders")
    def bidders(project_id: str, principal: Principal = Depends(principal_of)):
        project = registry.read(project_id).project
        doc: dict[str, Any] = {
            "registered": list(project.registered_bidders),
            "dossiers": {
                cid: list(reqs) for cid, reqs in sorted(project.dossiers.items())
            },
        }
        if project.prescreen is not None:
            doc["qualified"] = list(project.prescreen.qualified)
            doc["disqualified"] = [
                {"contractor_id": cid, "missing": list(missing)}
                for cid, missing in project.prescreen.disqualified
            ]
        return doc

    # -- prescreening

    @app.post("/projects/{project_id}/prescreening")
    def open_prescreening(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        return registry.mutate(project_id, "open_prescreening", {}, principal.name)

    @app.put("/projects/{project_id}/bidders/{contractor_id}/dossier")
    def submit_dossier(
        project_id: str,
        contractor_id: str,
        body: DossierBody,
        principal: Principal = Depends(require_admin),
    ):
        payload = {"contractor_id": contractor_id, "submitted": body.submitted}
        return registry.mutate(project_id, "submit_dossier", payload, principal.name)

    @app.post("/projects/{project_id}/prescreening/run")
    def run_prescreen(project_id: str, principal: Principal = Depends(require_admin)):
        return registry.mutate(project_id, "run_prescreen", {}, principal.name)

    # -- judgments and consistency

    @app.put("/projects/{project_id}/judgments/{dm}/{context_id}")
    def submit_judgment(
        project_id: str,
        dm: str,
        context_id: str,
        body: JudgmentBody,
        principal: Principal = Depends(principal_of),
    ):
        if not principal.is_admin and principal.name != dm:
            raise HTTPException(403, detail="token is bound to a different expert")
        payload = {
            "decision_maker_id": dm,
            "context_id": context_id,
            "entries": [entry.model_dump() for entry in body.entries],
        }
        return registry.mutate(project_id, "submit_judgment", payload, principal.name)

    @app.get("/projects/{project_id}/judgments/{dm}")
    def judgment_status(
        project_id: str, dm: str, principal: Principal = Depends(principal_of)
    ):
        project = registry.read(project_id).project
        visible = (
            principal.is_admin
            or principal.name == dm
            or project.state in RANKING_VISIBLE_STATES
        )
        if not visible:
            raise HTTPException(
                403, detail="judgments stay private until the ranking stage"
            )
        if dm not in project.hierarchy.decision_makers:
            raise HTTPException(404, detail=f"no expert {dm!r}")
        return project.judgment_status().get(dm, {})

    @app.get("/projects/{project_id}/consistency")
    def consistency_reports(
        project_id: str, principal: Principal = Depends(principal_of)
    ):
        project = registry.read(project_id).project
        show_all = principal.is_admin or project.state in RANKING_VISIBLE_STATES
        out = []
        for dm in project.hierarchy.decision_makers:
            if not show_all and dm != principal.name:
                continue
            for context_id in sorted(project.judgments.get(dm, {})):
                slot = project.judgments[dm][context_id]
                if slot.report is not None:
                    out.append(slot.report.as_dict())
        return out

    @app.post("/projects/{project_id}/consistency/review")
    def review_consistency(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        return registry.mutate(project_id, "review_consistency", {}, principal.name)

    @app.post("/projects/{project_id}/consistency/return")
    def return_for_revision(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        return registry.mutate(project_id, "return_for_revision", {}, principal.name)

    # -- technical evaluation and screening

    @app.post("/projects/{project_id}/evaluation/run")
    def run_technical_evaluation(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        return registry.mutate(
            project_id, "run_technical_evaluation", {}, principal.name
        )

    @app.get("/projects/{project_id}/evaluation")
    def evaluation(project_id: str, principal: Principal = Depends(principal_of)):
        project = registry.read(project_id).project
        if project.synthesis is None:
            raise HTTPException(404, detail="technical evaluation has not run yet")
        if not principal.is_admin and project.state not in RANKING_VISIBLE_STATES:
            raise HTTPException(403, detail="ranking not yet published")
        return project.synthesis.as_dict()

    @app.post("/projects/{project_id}/screening/apply")
    def apply_screening(project_id: str, principal: Principal = Depends(require_admin)):
        return registry.mutate(project_id, "apply_screening", {}, principal.name)

    # -- financial stage

    @app.post("/projects/{project_id}/financial/open")
    def open_financial(project_id: str, principal: Principal = Depends(require_admin)):
        return registry.mutate(project_id, "open_financial", {}, principal.name)

    @app.put("/projects/{project_id}/bids/{contractor_id}")
    def submit_bid(
        project_id: str,
        contractor_id: str,
        body: BidBody,
        principal: Principal = Depends(require_admin),
    ):
        payload: dict[str, Any] = {
            "contractor_id": contractor_id,
            "price": body.price,
        }
        if body.security_document is not None:
            payload["security_document"] = body.security_document
        return registry.mutate(project_id, "submit_bid", payload, principal.name)

    @app.post("/projects/{project_id}/financial/run")
    def run_financial_evaluation(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        return registry.mutate(
            project_id, "run_financial_evaluation", {}, principal.name
        )

    @app.get("/projects/{project_id}/award")
    def award(project_id: str, principal: Principal = Depends(principal_of)):
        project = registry.read(project_id).project
        if project.financial is None:
            raise HTTPException(404, detail="no award yet")
        return {
            "state": project.state.value,
            "winner": project.financial.winner,
            "financial": project.financial.as_dict(),
        }

    @app.post("/projects/{project_id}/cancel")
    def cancel_project(
        project_id: str,
        body: CancelBody,
        principal: Principal = Depends(require_admin),
    ):
        return registry.mutate(
            project_id, "cancel_project", {"reason": body.reason}, principal.name
        )

    # -- audit and text exports

    @app.get("/projects/{project_id}/audit")
    def audit_log(project_id: str, principal: Principal = Depends(require_admin)):
        return registry.read(project_id).audit.as_list()

    @app.get("/projects/{project_id}/reports/consistency")
    def consistency_report_text(
        project_id: str, principal: Principal = Depends(require_admin)
    ):
        project = registry.read(project_id).project
        sections = []
        for dm in project.hierarchy.decision_makers:
            for context_id in sorted(project.judgments.get(dm, {})):
                slot = project.judgments[dm][context_id]
                if slot.report is not None:
                    sections.append(consistency_text(slot.report))
        return Response("\n\n".join(sections) + "\n", media_type="text/plain")

    @app.get("/projects/{project_id}/reports/ranking")
    def ranking_report_text(
        project_id: str, principal: Principal = Depends(principal_of)
    ):
        project = registry.read(project_id).project
        if project.synthesis is None:
            raise HTTPException(404, detail="technical evaluation has not run yet")
        if not principal.is_admin and project.state not in RANKING_VISIBLE_STATES:
            raise HTTPException(403, detail="ranking not yet published")
        return Response(ranking_text(project.synthesis) + "\n", media_type="text/plain")

    @app.get("/projects/{project_id}/reports/financial")
    def financial_report_text(
        project_id: str, principal: Principal = Depends(principal_of)
    ):
        project = registry.read(project_id).project
        if project.financial is None:
            raise HTTPException(404, detail="financial evaluation has not run yet")
        return Response(
            financial_text(project.financial) + "\n", media_type="text/plain"
        )

    return app
