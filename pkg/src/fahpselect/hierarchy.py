"""The three-level decision hierarchy and the mandatory-requirement prescreen."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import InvalidHierarchy

#: Context id of the criteria-vs-goal comparison.
CRITERIA_CONTEXT = "criteria"


def subcriteria_context(criterion: str) -> str:
    """Context id for comparing one criterion's sub-criteria."""
    return f"subcriteria:{criterion}"


def alternatives_context(sub_criterion: str) -> str:
    """Context id for comparing the alternatives under one sub-criterion."""
    return f"alternatives:{sub_criterion}"


@dataclass(frozen=True)
class ComparisonContext:
    context_id: str
    labels: tuple[str, ...]


@dataclass(frozen=True)
class DecisionHierarchy:
    """Goal, criteria, per-criterion sub-criteria, alternatives and the expert group."""

    goal: str
    criteria: tuple[str, ...]
    sub_criteria: Mapping[str, tuple[str, ...]]
    alternatives: tuple[str, ...]
    decision_makers: tuple[str, ...]

    def validate(self) -> None:
        if len(self.criteria) < 2:
            raise InvalidHierarchy("need at least two criteria")
        if len(self.alternatives) < 2:
            raise InvalidHierarchy("need at least two alternatives")
        if len(self.decision_makers) < 1:
            raise InvalidHierarchy("need at least one decision maker")
        if set(self.sub_criteria) != set(self.criteria):
            raise InvalidHierarchy("sub-criteria must be keyed by exactly the criteria")
        for criterion, subs in self.sub_criteria.items():
            if len(subs) < 1:
                raise InvalidHierarchy(f"criterion {criterion!r} has no sub-criteria")
        for level, ids in (
            ("criteria", self.criteria),
            ("sub-criteria", self.all_sub_criteria()),
            ("alternatives", self.alternatives),
            ("decision makers", self.decision_makers),
        ):
            if len(set(ids)) != len(ids):
                raise InvalidHierarchy(f"duplicate identifiers at the {level} level")

    def all_sub_criteria(self) -> tuple[str, ...]:
        """Every sub-criterion, flattened in criteria order."""
        return tuple(
            sub for criterion in self.criteria for sub in self.sub_criteria[criterion]
        )

    def criterion_of(self, sub_criterion: str) -> str:
        for criterion in self.criteria:
            if sub_criterion in self.sub_criteria[criterion]:
                return criterion
        raise InvalidHierarchy(f"unknown sub-criterion {sub_criterion!r}")

    def contexts(self) -> list[ComparisonContext]:
        """Every comparison context a decision maker must fill, in canonical order."""
        out = [ComparisonContext(CRITERIA_CONTEXT, self.criteria)]
        for criterion in self.criteria:
            out.append(
                ComparisonContext(
                    subcriteria_context(criterion), self.sub_criteria[criterion]
                )
            )
        for sub in self.all_sub_criteria():
            out.append(ComparisonContext(alternatives_context(sub), self.alternatives))
        return out

    def context_labels(self, context_id: str) -> tuple[str, ...]:
        for ctx in self.contexts():
            if ctx.context_id == context_id:
                return ctx.labels
        raise InvalidHierarchy(f"unknown comparison context {context_id!r}")

    def with_alternatives(self, alternatives: Sequence[str]) -> DecisionHierarchy:
        """Copy with the alternative list replaced (used after prescreening)."""
        return DecisionHierarchy(
            goal=self.goal,
            criteria=self.criteria,
            sub_criteria=dict(self.sub_criteria),
            alternatives=tuple(alternatives),
            decision_makers=self.decision_makers,
        )

    def as_dict(self) -> dict:
        return {
            "goal": self.goal,
            "criteria": list(self.criteria),
            "sub_criteria": {c: list(s) for c, s in self.sub_criteria.items()},
            "alternatives": list(self.alternatives),
            "decision_makers": list(self.decision_makers),
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> DecisionHierarchy:
        for key in ("goal", "criteria", "sub_criteria", "alternatives", "decision_makers"):
            if key not in doc:
                raise InvalidHierarchy(f"hierarchy document is missing {key!r}")
        if not isinstance(doc["sub_criteria"], Mapping):
            raise InvalidHierarchy(
                "sub_criteria must map each criterion to its sub-criteria"
            )
        hierarchy = cls(
            goal=doc["goal"],
            criteria=tuple(doc["criteria"]),
            sub_criteria={c: tuple(s) for c, s in doc["sub_criteria"].items()},
            alternatives=tuple(doc["alternatives"]),
            decision_makers=tuple(doc["decision_makers"]),
        )
        hierarchy.validate()
        return hierarchy


@dataclass(frozen=True)
class BidderDossier:
    """The requirement slots one bidder actually submitted."""

    contractor_id: str
    submitted: frozenset[str]
    mandatory: frozenset[str]


@dataclass(frozen=True)
class PrescreenOutcome:
    qualified: tuple[str, ...]
    disqualified: tuple[tuple[str, tuple[str, ...]], ...]


def prescreen_mandatory(dossiers: Sequence[BidderDossier]) -> PrescreenOutcome:
    """Split bidders on the mandatory-requirement rule.

    A bidder qualifies iff every mandatory requirement is among its submitted
    ones; disqualified entries carry the missing requirement ids. Input order
    is preserved on both sides.
    """
    qualified: list[str] = []
    disqualified: list[tuple[str, tuple[str, ...]]] = []
    for dossier in dossiers:
        missing = sorted(dossier.mandatory - dossier.submitted)
        if missing:
            disqualified.append((dossier.contractor_id, tuple(missing)))
        else:
            qualified.append(dossier.contractor_id)
    return PrescreenOutcome(tuple(qualified), tuple(disqualified))
