"""Weight synthesis down the hierarchy, ranking and the screening gate.

Each decision maker's matrices are synthesized independently into one global
weight per alternative; the per-expert results are then averaged into final
weights that drive ranking and the screening threshold. An aggregate-first
variant (geometric-mean matrix across experts, then one synthesis) exists for
reporting, but the averaged per-expert path is the one the award uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import IncompleteCoverage, IncompleteJudgments, LabelMismatch
from .hierarchy import (
    CRITERIA_CONTEXT,
    DecisionHierarchy,
    alternatives_context,
    subcriteria_context,
)
from .matrices import FuzzyComparisonMatrix, aggregate_experts
from .weights import WeightVector, local_weights


def global_subcriterion_weights(
    criterion_weight: float, sub_locals: WeightVector
) -> WeightVector:
    """Scale a criterion's sub-criteria local weights by the criterion weight."""
    return WeightVector(
        labels=sub_locals.labels,
        values=tuple(criterion_weight * v for v in sub_locals.values),
    )


def alternative_global_weight(
    sub_globals: WeightVector,
    alt_locals: Mapping[str, WeightVector],
    n_sub: int,
) -> dict[str, float]:
    """Global weight of each alternative: weighted sum over all sub-criteria.

    Every sub-criterion contributes its global weight times the alternative's
    local weight under it; the sum is divided by the sub-criterion count.
    The division rescales all alternatives uniformly and never changes the
    ranking, but it is part of the published weight convention.
    """
    missing = [s for s in sub_globals.labels if s not in alt_locals]
    if missing:
        raise IncompleteCoverage(f"no alternative weights under: {missing}")
    first = alt_locals[sub_globals.labels[0]].labels
    for sub in sub_globals.labels:
        if alt_locals[sub].labels != first:
            raise LabelMismatch(
                f"alternative sets differ between sub-criteria: "
                f"{alt_locals[sub].labels} vs {first}"
            )
    out = {alt: 0.0 for alt in first}
    for sub, sub_weight in zip(sub_globals.labels, sub_globals.values):
        locals_ = alt_locals[sub]
        for alt, local in zip(locals_.labels, locals_.values):
            out[alt] += sub_weight * local
    return {alt: value / n_sub for alt, value in out.items()}


def final_weights(per_dm: Sequence[Mapping[str, float]]) -> dict[str, float]:
    """Arithmetic mean of each alternative's global weight across decision makers."""
    if not per_dm:
        raise LabelMismatch("need at least one decision maker's weights")
    alts = list(per_dm[0])
    for dm_weights in per_dm[1:]:
        if set(dm_weights) != set(alts):
            raise LabelMismatch(
                f"alternative sets differ across decision makers: "
                f"{sorted(dm_weights)} vs {sorted(alts)}"
            )
    z = len(per_dm)
    return {alt: sum(w[alt] for w in per_dm) / z for alt in alts}


@dataclass(frozen=True)
class RankedAlternative:
    alternative: str
    weight: float
    rank: int


def rank(fw: Mapping[str, float]) -> tuple[RankedAlternative, ...]:
    """Descending ranking; ties share a rank and are listed in id order."""
    if not fw:
        raise LabelMismatch("cannot rank an empty weight map")
    ordered = sorted(fw.items(), key=lambda kv: (-kv[1], kv[0]))
    ranked: list[RankedAlternative] = []
    for pos, (alt, weight) in enumerate(ordered):
        if pos > 0 and weight == ranked[-1].weight:
            shared = ranked[-1].rank
        else:
            shared = pos + 1
        ranked.append(RankedAlternative(alt, weight, shared))
    return tuple(ranked)


@dataclass(frozen=True)
class ScreeningOutcome:
    sigma: float
    qualified: tuple[str, ...]
    screened_out: tuple[str, ...]


def screen(fw: Mapping[str, float]) -> ScreeningOutcome:
    """Half-of-maximum screening: keep alternatives with weight >= sigma.

    The maximum always passes its own half, so the qualified set is never
    empty. Boundary weights exactly at sigma qualify.
    """
    ranking = rank(fw)
    sigma = 0.5 * ranking[0].weight
    qualified = tuple(r.alternative for r in ranking if r.weight >= sigma)
    screened_out = tuple(r.alternative for r in ranking if r.weight < sigma)
    return ScreeningOutcome(sigma, qualified, screened_out)


@dataclass(frozen=True)
class SynthesisResult:
    """Everything the technical evaluation produces, per expert and combined."""

    decision_makers: tuple[str, ...]
    criteria_weights: dict[str, WeightVector]
    sub_criteria_weights: dict[str, dict[str, WeightVector]]
    global_sub_weights: dict[str, WeightVector]
    alternative_weights: dict[str, dict[str, float]]
    final: dict[str, float]
    ranking: tuple[RankedAlternative, ...]
    sigma: float
    qualified: tuple[str, ...]
    screened_out: tuple[str, ...]

    def table_rows(self) -> list[dict]:
        """Flat export: one row per alternative with per-expert and final weights."""
        rank_of = {r.alternative: r.rank for r in self.ranking}
        rows = []
        for r in self.ranking:
            alt = r.alternative
            rows.append(
                {
                    "alternative": alt,
                    "per_dm": {
                        dm: self.alternative_weights[dm][alt]
                        for dm in self.decision_makers
                    },
                    "final_weight": self.final[alt],
                    "rank": rank_of[alt],
                    "qualified": alt in self.qualified,
                }
            )
        return rows

    def as_dict(self) -> dict:
        return {
            "decision_makers": list(self.decision_makers),
            "criteria_weights": {
                dm: wv.as_dict() for dm, wv in self.criteria_weights.items()
            },
            "sub_criteria_weights": {
                dm: {c: wv.as_dict() for c, wv in per.items()}
                for dm, per in self.sub_criteria_weights.items()
            },
            "global_sub_weights": {
                dm: wv.as_dict() for dm, wv in self.global_sub_weights.items()
            },
            "alternative_weights": self.alternative_weights,
            "final_weights": self.final,
            "ranking": [
                {"alternative": r.alternative, "weight": r.weight, "rank": r.rank}
                for r in self.ranking
            ],
            "sigma": self.sigma,
            "qualified": list(self.qualified),
            "screened_out": list(self.screened_out),
        }


def synthesize(
    hierarchy: DecisionHierarchy,
    matrices: Mapping[str, Mapping[str, FuzzyComparisonMatrix]],
) -> SynthesisResult:
    """Run the per-expert synthesis and combine into final weights.

    ``matrices`` maps decision maker id to context id to accepted matrix.
    Raises IncompleteJudgments listing every (decision maker, context) pair
    that is still missing.
    """
    contexts = hierarchy.contexts()
    missing = [
        (dm, ctx.context_id)
        for dm in hierarchy.decision_makers
        for ctx in contexts
        if ctx.context_id not in matrices.get(dm, {})
    ]
    if missing:
        raise IncompleteJudgments(missing)

    subs = hierarchy.all_sub_criteria()
    criteria_weights: dict[str, WeightVector] = {}
    sub_weights: dict[str, dict[str, WeightVector]] = {}
    global_subs: dict[str, WeightVector] = {}
    alt_weights: dict[str, dict[str, float]] = {}

    for dm in hierarchy.decision_makers:
        per_context = matrices[dm]
        crit_wv = local_weights(per_context[CRITERIA_CONTEXT])
        criteria_weights[dm] = crit_wv

        per_criterion: dict[str, WeightVector] = {}
        global_labels: list[str] = []
        global_values: list[float] = []
        for criterion, crit_weight in zip(crit_wv.labels, crit_wv.values):
            sub_wv = local_weights(per_context[subcriteria_context(criterion)])
            per_criterion[criterion] = sub_wv
            scaled = global_subcriterion_weights(crit_weight, sub_wv)
            global_labels.extend(scaled.labels)
            global_values.extend(scaled.values)
        sub_weights[dm] = per_criterion
        global_wv = WeightVector(tuple(global_labels), tuple(global_values))
        global_subs[dm] = global_wv

        alt_locals = {
            sub: local_weights(per_context[alternatives_context(sub)]) for sub in subs
        }
        alt_weights[dm] = alternative_global_weight(global_wv, alt_locals, len(subs))

    final = final_weights([alt_weights[dm] for dm in hierarchy.decision_makers])
    ranking = rank(final)
    screening = screen(final)
    return SynthesisResult(
        decision_makers=hierarchy.decision_makers,
        criteria_weights=criteria_weights,
        sub_criteria_weights=sub_weights,
        global_sub_weights=global_subs,
        alternative_weights=alt_weights,
        final=final,
        ranking=ranking,
        sigma=screening.sigma,
        qualified=screening.qualified,
        screened_out=screening.screened_out,
    )


def aggregated_local_weights(
    mats: Sequence[FuzzyComparisonMatrix],
) -> WeightVector:
    """Local weights of the expert-aggregated matrix (reporting path only)."""
    return local_weights(aggregate_experts(mats))
