"""The shipped nine-contractor case study: fixtures, loaders and a full run.

The package bundles one complete worked example (a university lecture-theatre
construction tender): hierarchy, fifteen bidder dossiers, four experts' full
judgment sets, the owner's estimate and the seven qualified bids. Loading and
running it end to end exercises every stage of the pipeline and is what the
``case-study`` CLI verb prints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib.resources import files
from os import PathLike
from pathlib import Path
from typing import Mapping, Union

from .consistency import ConsistencyReport, evaluate_consistency
from .financial import Bid, FinancialResult, evaluate_bids
from .hierarchy import BidderDossier, DecisionHierarchy, PrescreenOutcome, prescreen_mandatory
from .matrices import FuzzyComparisonMatrix, JudgmentEntry, JudgmentSubmission, matrix_from_submission
from .money import parse_amount
from .synthesis import SynthesisResult, synthesize

_FIXTURES = files("fahpselect") / "fixtures"

#: Anything the loaders can read the data-set layout from: the packaged
#: fixtures by default, or any directory with the same file names.
DataSource = Union[str, PathLike, None]


def _root(base: DataSource):
    return _FIXTURES if base is None else Path(base)


def _read(name: str, base: DataSource = None) -> dict:
    return json.loads((_root(base) / name).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class ProjectConfig:
    """Tender-level configuration shipped with the case study."""

    project_id: str
    title: str
    estimate_minor: int
    security_threshold_minor: int
    gamma: float
    requirements: tuple[str, ...]
    mandatory_requirements: tuple[str, ...]
    display_names: Mapping[str, str]


@dataclass(frozen=True)
class CaseStudy:
    """Everything needed to run the example tender from scratch."""

    hierarchy: DecisionHierarchy
    project: ProjectConfig
    dossiers: tuple[BidderDossier, ...]
    bids: tuple[Bid, ...]
    judgments: Mapping[str, Mapping[str, JudgmentSubmission]]


@dataclass(frozen=True)
class CaseStudyRun:
    """Outcome of every stage of one full pipeline run."""

    prescreen: PrescreenOutcome
    consistency: Mapping[str, Mapping[str, ConsistencyReport]]
    synthesis: SynthesisResult
    financial: FinancialResult


def load_project(base: DataSource = None) -> ProjectConfig:
    doc = _read("project.json", base)
    return ProjectConfig(
        project_id=doc["project_id"],
        title=doc["title"],
        estimate_minor=parse_amount(doc["estimate"]),
        security_threshold_minor=parse_amount(doc["security_threshold"]),
        gamma=doc["gamma"],
        requirements=tuple(doc["requirements"]),
        mandatory_requirements=tuple(doc["mandatory_requirements"]),
        display_names=doc["display_names"],
    )


def load_hierarchy(base: DataSource = None) -> DecisionHierarchy:
    return DecisionHierarchy.from_dict(_read("hierarchy.json", base))


def load_dossiers(
    project: ProjectConfig | None = None, base: DataSource = None
) -> tuple[BidderDossier, ...]:
    project = project or load_project(base)
    mandatory = frozenset(project.mandatory_requirements)
    return tuple(
        BidderDossier(
            contractor_id=doc["contractor_id"],
            submitted=frozenset(doc["submitted"]),
            mandatory=mandatory,
        )
        for doc in _read("dossiers.json", base)["dossiers"]
    )


def load_bids(base: DataSource = None) -> tuple[Bid, ...]:
    return tuple(
        Bid(contractor_id=doc["contractor_id"], price_minor=parse_amount(doc["price"]))
        for doc in _read("bids.json", base)["bids"]
    )


def load_judgments(base: DataSource = None) -> dict[str, dict[str, JudgmentSubmission]]:
    hierarchy = load_hierarchy(base)
    out: dict[str, dict[str, JudgmentSubmission]] = {}
    for dm in hierarchy.decision_makers:
        doc = json.loads(
            (_root(base) / "judgments" / f"{dm}.json").read_text(encoding="utf-8")
        )
        per_context = {}
        for sub in doc["submissions"]:
            per_context[sub["context_id"]] = JudgmentSubmission(
                decision_maker_id=dm,
                context_id=sub["context_id"],
                entries=tuple(
                    JudgmentEntry(
                        row=e["row"],
                        col=e["col"],
                        grade=e["grade"],
                        inverted=e["inverted"],
                    )
                    for e in sub["entries"]
                ),
            )
        out[dm] = per_context
    return out


def load_case_study(base: DataSource = None) -> CaseStudy:
    project = load_project(base)
    return CaseStudy(
        hierarchy=load_hierarchy(base),
        project=project,
        dossiers=load_dossiers(project, base),
        bids=load_bids(base),
        judgments=load_judgments(base),
    )


def case_study_matrices(
    case: CaseStudy,
) -> dict[str, dict[str, FuzzyComparisonMatrix]]:
    """Reconstruct every decision maker's matrices from the stored judgments."""
    matrices: dict[str, dict[str, FuzzyComparisonMatrix]] = {}
    for dm in case.hierarchy.decision_makers:
        matrices[dm] = {}
        for ctx in case.hierarchy.contexts():
            matrices[dm][ctx.context_id] = matrix_from_submission(
                case.judgments[dm][ctx.context_id], ctx.labels
            )
    return matrices


def run_case_study(case: CaseStudy | None = None) -> CaseStudyRun:
    """Prescreen, consistency-check, synthesize and award in one pass."""
    case = case or load_case_study()
    prescreen = prescreen_mandatory(case.dossiers)

    matrices = case_study_matrices(case)
    consistency: dict[str, dict[str, ConsistencyReport]] = {}
    for dm, per_context in matrices.items():
        consistency[dm] = {
            ctx_id: evaluate_consistency(
                mat, gamma=case.project.gamma, decision_maker_id=dm
            )
            for ctx_id, mat in per_context.items()
        }

    synthesis = synthesize(case.hierarchy, matrices)
    financial = evaluate_bids(
        estimate_minor=case.project.estimate_minor,
        bids=case.bids,
        qualified=synthesis.qualified,
        security_threshold_minor=case.project.security_threshold_minor,
    )
    return CaseStudyRun(
        prescreen=prescreen,
        consistency=consistency,
        synthesis=synthesis,
        financial=financial,
    )
