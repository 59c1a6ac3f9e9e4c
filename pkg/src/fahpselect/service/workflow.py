"""Project lifecycle engine.

A project moves through a fixed forward chain of states; the single
backward edge returns a project from consistency review to judgment
collection so flagged matrices can be revised.  Every mutation is a named
action with a JSON payload, applied deterministically: replaying the audit
log of actions from an empty engine rebuilds the exact same project.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Sequence

from ..consistency import MAX_GAMMA, ConsistencyReport, evaluate_consistency
from ..errors import (
    BidFromScreenedOut,
    IncompleteJudgments,
    InvalidThreshold,
    MissingBidSecurity,
    NoQualifiedBidders,
    UnknownContractor,
    UnknownDecisionMaker,
    UnknownElement,
    WrongState,
)
from ..financial import (
    DEFAULT_SECURITY_THRESHOLD_MINOR,
    Bid,
    FinancialResult,
    bid_security_required,
    evaluate_bids,
)
from ..hierarchy import BidderDossier, DecisionHierarchy, PrescreenOutcome, prescreen_mandatory
from ..matrices import (
    FuzzyComparisonMatrix,
    JudgmentEntry,
    JudgmentSubmission,
    matrix_from_submission,
)
from ..money import format_amount, parse_amount
from ..synthesis import SynthesisResult, synthesize
from .audit import AuditLog, AuditRecord


class WorkflowState(str, Enum):
    SETUP = "Setup"
    PRESCREENING = "Prescreening"
    JUDGMENT_COLLECTION = "JudgmentCollection"
    CONSISTENCY_REVIEW = "ConsistencyReview"
    TECHNICAL_RANKING = "TechnicalRanking"
    SCREENING = "Screening"
    FINANCIAL_EVALUATION = "FinancialEvaluation"
    AWARDED = "Awarded"
    CANCELLED = "Cancelled"


#: Position in the forward chain; used to compare workflow progress.
STATE_ORDER = {
    WorkflowState.SETUP: 0,
    WorkflowState.PRESCREENING: 1,
    WorkflowState.JUDGMENT_COLLECTION: 2,
    WorkflowState.CONSISTENCY_REVIEW: 3,
    WorkflowState.TECHNICAL_RANKING: 4,
    WorkflowState.SCREENING: 5,
    WorkflowState.FINANCIAL_EVALUATION: 6,
    WorkflowState.AWARDED: 7,
}

TERMINAL_STATES = {WorkflowState.AWARDED, WorkflowState.CANCELLED}


@dataclass
class JudgmentSlot:
    """Latest submission of one decision maker for one context, with verdict."""

    submission: JudgmentSubmission
    report: ConsistencyReport | None
    accepted: bool
    attempts: int

    @property
    def status(self) -> str:
        return "complete" if self.accepted else "draft"


@dataclass
class Project:
    """Mutable project record; only the engine should write to it."""

    project_id: str
    title: str
    hierarchy: DecisionHierarchy
    registered_bidders: tuple[str, ...]
    requirements: tuple[str, ...]
    mandatory_requirements: tuple[str, ...]
    gamma: float
    estimate_minor: int
    security_threshold_minor: int
    state: WorkflowState = WorkflowState.SETUP
    created_at: str = ""
    updated_at: str = ""
    dossiers: dict[str, tuple[str, ...]] = field(default_factory=dict)
    prescreen: PrescreenOutcome | None = None
    judgments: dict[str, dict[str, JudgmentSlot]] = field(default_factory=dict)
    synthesis: SynthesisResult | None = None
    financial: FinancialResult | None = None
    bids: dict[str, Bid] = field(default_factory=dict)
    cancelled_reason: str | None = None

    def contexts(self):
        return self.hierarchy.contexts()

    def pair_universe(self) -> list[tuple[str, str]]:
        """Every (decision maker, context) pair that needs an accepted matrix.

        Single-element contexts carry no comparisons, so they are excluded;
        their weight is trivially one.
        """
        return [
            (dm, ctx.context_id)
            for dm in self.hierarchy.decision_makers
            for ctx in self.contexts()
            if len(ctx.labels) >= 2
        ]

    def missing_pairs(self, accepted_only: bool) -> list[tuple[str, str]]:
        out = []
        for dm, context_id in self.pair_universe():
            slot = self.judgments.get(dm, {}).get(context_id)
            if slot is None or (accepted_only and not slot.accepted):
                out.append((dm, context_id))
        return out

    def accepted_matrices(self) -> dict[str, dict[str, FuzzyComparisonMatrix]]:
        """Accepted judgment matrices only; drafts never reach synthesis."""
        by_context = {ctx.context_id: ctx.labels for ctx in self.contexts()}
        out: dict[str, dict[str, FuzzyComparisonMatrix]] = {}
        for dm in self.hierarchy.decision_makers:
            out[dm] = {}
            for context_id, labels in by_context.items():
                slot = self.judgments.get(dm, {}).get(context_id)
                if slot is not None and slot.accepted:
                    out[dm][context_id] = matrix_from_submission(
                        slot.submission, labels
                    )
                elif len(labels) == 1:
                    out[dm][context_id] = matrix_from_submission(
                        JudgmentSubmission(dm, context_id, ()), labels
                    )
        return out

    def judgment_status(self) -> dict[str, dict[str, dict[str, Any]]]:
        out: dict[str, dict[str, dict[str, Any]]] = {}
        for dm in self.hierarchy.decision_makers:
            out[dm] = {}
            for context_id in sorted(self.judgments.get(dm, {})):
                slot = self.judgments[dm][context_id]
                entry: dict[str, Any] = {
                    "status": slot.status,
                    "attempts": slot.attempts,
                }
                if slot.report is not None:
                    entry["consistency_ratio"] = slot.report.cr
                    entry["accepted"] = slot.report.accepted
                out[dm][context_id] = entry
        return out

    def as_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "project_id": self.project_id,
            "title": self.title,
            "state": self.state.value,
            "gamma": self.gamma,
            "estimate": format_amount(self.estimate_minor),
            "security_threshold": format_amount(self.security_threshold_minor),
            "security_required": bid_security_required(
                self.estimate_minor, self.security_threshold_minor
            ),
            "requirements": list(self.requirements),
            "mandatory_requirements": list(self.mandatory_requirements),
            "registered_bidders": list(self.registered_bidders),
            "hierarchy": self.hierarchy.as_dict(),
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "dossiers": {
                cid: list(reqs) for cid, reqs in sorted(self.dossiers.items())
            },
            "judgments": self.judgment_status(),
            "bids": {
                cid: format_amount(bid.price_minor)
                for cid, bid in sorted(self.bids.items())
            },
        }
        if self.prescreen is not None:
            doc["prescreen"] = {
                "qualified": list(self.prescreen.qualified),
                "disqualified": [
                    {"contractor_id": cid, "missing": list(missing)}
                    for cid, missing in self.prescreen.disqualified
                ],
            }
        if self.synthesis is not None:
            doc["technical"] = self.synthesis.as_dict()
        if self.financial is not None:
            doc["financial"] = self.financial.as_dict()
        if self.cancelled_reason is not None:
            doc["cancelled_reason"] = self.cancelled_reason
        return doc


def _require_state(project: Project, *allowed: WorkflowState) -> None:
    if project.state not in allowed:
        names = " or ".join(s.value for s in allowed)
        raise WrongState(
            f"operation requires state {names}, project is in {project.state.value}"
        )


class ProjectEngine:
    """Applies named actions to one project and records them in the audit log.

    The engine is deterministic: action payloads carry every input, including
    timestamps, so replaying a recorded log reproduces the project state and
    the log itself bit for bit.
    """

    def __init__(self) -> None:
        self.project: Project | None = None
        self.audit = AuditLog()

    # -- generic application ------------------------------------------------

    def apply(
        self, action: str, payload: Mapping[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        handler = getattr(self, f"_do_{action}", None)
        if handler is None:
            raise ValueError(f"unknown action {action!r}")
        if action != "create_project" and self.project is None:
            raise WrongState("project does not exist yet")
        prior = self.project.state.value if self.project is not None else ""
        result = handler(dict(payload), actor, timestamp)
        assert self.project is not None
        self.project.updated_at = timestamp
        self.audit.append(
            timestamp=timestamp,
            actor=actor,
            action=action,
            payload=dict(payload),
            prior_state=prior,
            next_state=self.project.state.value,
        )
        return result

    @classmethod
    def replay(cls, records: Sequence[AuditRecord]) -> "ProjectEngine":
        """Rebuild a project by reapplying its recorded actions from scratch."""
        engine = cls()
        for record in records:
            engine.apply(record.action, record.payload, record.actor, record.timestamp)
        return engine

    # -- lifecycle actions --------------------------------------------------

    def _do_create_project(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        if self.project is not None:
            raise WrongState("project already exists")
        hierarchy = DecisionHierarchy.from_dict(payload["hierarchy"])
        gamma = float(payload.get("gamma", 0.1))
        if not 0.0 <= gamma <= MAX_GAMMA:
            raise InvalidThreshold(
                f"threshold must lie in [0, {MAX_GAMMA}], got {gamma}"
            )
        requirements = tuple(payload.get("requirements", ()))
        mandatory = tuple(payload.get("mandatory_requirements", ()))
        unknown = sorted(set(mandatory) - set(requirements))
        if unknown:
            raise ValueError(f"mandatory requirements not declared: {unknown}")
        estimate_minor = parse_amount(str(payload["estimate"]))
        threshold_minor = (
            parse_amount(str(payload["security_threshold"]))
            if "security_threshold" in payload
            else DEFAULT_SECURITY_THRESHOLD_MINOR
        )
        self.project = Project(
            project_id=str(payload["project_id"]),
            title=str(payload.get("title", "")),
            hierarchy=hierarchy,
            registered_bidders=hierarchy.alternatives,
            requirements=requirements,
            mandatory_requirements=mandatory,
            gamma=gamma,
            estimate_minor=estimate_minor,
            security_threshold_minor=threshold_minor,
            created_at=timestamp,
            updated_at=timestamp,
        )
        return {"project_id": self.project.project_id, "state": self.project.state.value}

    def _do_open_prescreening(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.SETUP)
        project.state = WorkflowState.PRESCREENING
        return {"state": project.state.value}

    def _do_submit_dossier(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.PRESCREENING)
        contractor_id = str(payload["contractor_id"])
        if contractor_id not in project.registered_bidders:
            raise UnknownContractor(f"{contractor_id!r} is not a registered bidder")
        submitted = tuple(payload.get("submitted", ()))
        unknown = sorted(set(submitted) - set(project.requirements))
        if unknown:
            raise ValueError(f"unknown requirement ids: {unknown}")
        project.dossiers[contractor_id] = submitted
        return {"contractor_id": contractor_id, "submitted": list(submitted)}

    def _do_run_prescreen(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.PRESCREENING)
        mandatory = frozenset(project.mandatory_requirements)
        dossiers = [
            BidderDossier(
                contractor_id=cid,
                submitted=frozenset(project.dossiers.get(cid, ())),
                mandatory=mandatory,
            )
            for cid in project.registered_bidders
        ]
        outcome = prescreen_mandatory(dossiers)
        if len(outcome.qualified) < 2:
            raise NoQualifiedBidders(
                f"prescreening left {len(outcome.qualified)} qualified bidder(s); "
                "at least two are needed to rank"
            )
        project.prescreen = outcome
        project.hierarchy = project.hierarchy.with_alternatives(outcome.qualified)
        project.state = WorkflowState.JUDGMENT_COLLECTION
        return {
            "state": project.state.value,
            "qualified": list(outcome.qualified),
            "disqualified": [
                {"contractor_id": cid, "missing": list(missing)}
                for cid, missing in outcome.disqualified
            ],
        }

    def _do_submit_judgment(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(
            project,
            WorkflowState.JUDGMENT_COLLECTION,
            WorkflowState.CONSISTENCY_REVIEW,
        )
        dm = str(payload["decision_maker_id"])
        if dm not in project.hierarchy.decision_makers:
            raise UnknownDecisionMaker(f"{dm!r} is not part of the expert group")
        context_id = str(payload["context_id"])
        labels = None
        for ctx in project.contexts():
            if ctx.context_id == context_id:
                labels = ctx.labels
                break
        if labels is None:
            raise UnknownElement(f"{context_id!r} is not a comparison context")

        submission = JudgmentSubmission(
            decision_maker_id=dm,
            context_id=context_id,
            entries=tuple(
                JudgmentEntry(
                    row=str(e["row"]),
                    col=str(e["col"]),
                    grade=str(e["grade"]),
                    inverted=bool(e.get("inverted", False)),
                )
                for e in payload.get("entries", ())
            ),
            submitted_at=timestamp,
        )
        matrix = matrix_from_submission(submission, labels)
        if matrix.n >= 2:
            report = evaluate_consistency(
                matrix, gamma=project.gamma, decision_maker_id=dm
            )
            accepted = report.accepted
        else:
            report = None
            accepted = True

        previous = project.judgments.setdefault(dm, {}).get(context_id)
        attempts = (previous.attempts if previous else 0) + 1
        project.judgments[dm][context_id] = JudgmentSlot(
            submission=submission,
            report=report,
            accepted=accepted,
            attempts=attempts,
        )
        result: dict[str, Any] = {
            "decision_maker_id": dm,
            "context_id": context_id,
            "status": "complete" if accepted else "draft",
            "attempts": attempts,
        }
        if report is not None:
            result["report"] = report.as_dict()
        return result

    def _do_review_consistency(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.JUDGMENT_COLLECTION)
        missing = project.missing_pairs(accepted_only=False)
        if missing:
            raise IncompleteJudgments(missing)
        project.state = WorkflowState.CONSISTENCY_REVIEW
        outstanding = project.missing_pairs(accepted_only=True)
        return {
            "state": project.state.value,
            "outstanding": [
                {"decision_maker_id": dm, "context_id": ctx} for dm, ctx in outstanding
            ],
            "ready": not outstanding,
        }

    def _do_return_for_revision(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.CONSISTENCY_REVIEW)
        outstanding = project.missing_pairs(accepted_only=True)
        if not outstanding:
            raise WrongState("no rejected matrices are awaiting revision")
        project.state = WorkflowState.JUDGMENT_COLLECTION
        return {
            "state": project.state.value,
            "outstanding": [
                {"decision_maker_id": dm, "context_id": ctx} for dm, ctx in outstanding
            ],
        }

    def _do_run_technical_evaluation(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.CONSISTENCY_REVIEW)
        not_accepted = project.missing_pairs(accepted_only=True)
        if not_accepted:
            raise IncompleteJudgments(not_accepted)
        project.synthesis = synthesize(project.hierarchy, project.accepted_matrices())
        project.state = WorkflowState.TECHNICAL_RANKING
        return {"state": project.state.value, "technical": project.synthesis.as_dict()}

    def _do_apply_screening(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.TECHNICAL_RANKING)
        synthesis = project.synthesis
        project.state = WorkflowState.SCREENING
        return {
            "state": project.state.value,
            "sigma": synthesis.sigma,
            "qualified": list(synthesis.qualified),
            "screened_out": list(synthesis.screened_out),
        }

    def _do_open_financial(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.SCREENING)
        project.state = WorkflowState.FINANCIAL_EVALUATION
        return {
            "state": project.state.value,
            "security_required": bid_security_required(
                project.estimate_minor, project.security_threshold_minor
            ),
        }

    def _do_submit_bid(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.FINANCIAL_EVALUATION)
        contractor_id = str(payload["contractor_id"])
        if contractor_id not in project.registered_bidders:
            raise UnknownContractor(f"{contractor_id!r} is not a registered bidder")
        if contractor_id not in project.synthesis.qualified:
            raise BidFromScreenedOut(
                f"{contractor_id!r} did not pass the technical screening"
            )
        security_document = payload.get("security_document")
        if (
            bid_security_required(
                project.estimate_minor, project.security_threshold_minor
            )
            and not security_document
        ):
            raise MissingBidSecurity(
                f"bid security is mandatory for this estimate; {contractor_id!r} "
                "attached no security document"
            )
        bid = Bid(
            contractor_id=contractor_id,
            price_minor=parse_amount(str(payload["price"])),
            security_document=security_document,
        )
        project.bids[contractor_id] = bid
        return {
            "contractor_id": contractor_id,
            "price": format_amount(bid.price_minor),
        }

    def _do_run_financial_evaluation(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        _require_state(project, WorkflowState.FINANCIAL_EVALUATION)
        result = evaluate_bids(
            project.estimate_minor,
            list(project.bids.values()),
            qualified=project.synthesis.qualified,
            security_threshold_minor=project.security_threshold_minor,
        )
        project.financial = result
        project.state = WorkflowState.AWARDED
        return {"state": project.state.value, "financial": result.as_dict()}

    def _do_cancel_project(
        self, payload: dict[str, Any], actor: str, timestamp: str
    ) -> dict[str, Any]:
        project = self.project
        if project.state in TERMINAL_STATES:
            raise WrongState(f"project is already {project.state.value}")
        project.cancelled_reason = str(payload.get("reason", ""))
        project.state = WorkflowState.CANCELLED
        return {"state": project.state.value, "reason": project.cancelled_reason}


#: Every action the engine understands, in canonical lifecycle order.
ACTIONS = (
    "create_project",
    "open_prescreening",
    "submit_dossier",
    "run_prescreen",
    "submit_judgment",
    "review_consistency",
    "return_for_revision",
    "run_technical_evaluation",
    "apply_screening",
    "open_financial",
    "submit_bid",
    "run_financial_evaluation",
    "cancel_project",
)
