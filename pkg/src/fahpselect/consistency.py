"""Consistency control: ratio computation and the revision feedback loop.

A judgment matrix is accepted when its consistency ratio stays within the
project threshold; otherwise it is rejected with targeted revision hints so
the decision maker knows which comparisons to reconsider.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateWeights,
    InvalidThreshold,
    LabelMismatch,
    UnsupportedDimension,
)
from .matrices import CrispMatrix, FuzzyComparisonMatrix, defuzzify_matrix
from .scale import nearest_grade
from .weights import WeightVector, local_weights

#: Saaty's random consistency index for dimensions 1..10.
RANDOM_INDEX = (0.0, 0.0, 0.58, 0.9, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49)

#: Identification rule outcomes.
IR_REJECTED = "IR.1"
IR_ACCEPTED = "IR.2"

#: Direction rule outcomes.
DR_REJECT_AND_MODIFY = "DR.1-RejectAndModify"
DR_ACCEPT = "DR.2-Accept"

DEFAULT_GAMMA = 0.1
MAX_GAMMA = 0.1


def random_index(n: int) -> float:
    """Random consistency index for an n-dimensional matrix (1 <= n <= 10)."""
    if n < 1 or n > len(RANDOM_INDEX):
        raise UnsupportedDimension(
            f"random index is tabulated for 1 <= n <= {len(RANDOM_INDEX)}, got {n}"
        )
    return RANDOM_INDEX[n - 1]


def lambda_max(crisp: CrispMatrix, weights: WeightVector) -> float:
    """Principal-eigenvalue estimate: mean over rows of (A w)_i / w_i.

    For a perfectly consistent matrix every ratio equals the dimension, so
    the mean is exactly n; inconsistency pushes it above n.
    """
    if crisp.labels != weights.labels:
        raise LabelMismatch(
            f"matrix covers {crisp.labels}, weights cover {weights.labels}"
        )
    w = np.asarray(weights.values, dtype=float)
    if np.any(w <= 0):
        raise DegenerateWeights("lambda_max needs strictly positive weights")
    return float(np.mean((crisp.values @ w) / w))


def consistency_index(lam: float, n: int) -> float:
    """(lambda_max - n) / (n - 1)."""
    if n < 2:
        raise UnsupportedDimension(f"consistency index needs n >= 2, got {n}")
    return (lam - n) / (n - 1)


def consistency_ratio(ci: float, ri: float) -> float:
    """CI / RI; zero when RI is zero (1x1 and 2x2 matrices are consistent by construction)."""
    if ri < 0:
        raise ValueError(f"random index must be nonnegative, got {ri}")
    if ri == 0:
        return 0.0
    return ci / ri


@dataclass(frozen=True)
class GradeRef:
    """A scale grade plus its orientation."""

    label: str
    inverted: bool = False

    def as_dict(self) -> dict:
        return {"grade": self.label, "inverted": self.inverted}


@dataclass(frozen=True)
class RevisionHint:
    """One comparison worth revisiting, with the grade the weights imply."""

    row: str
    col: str
    current: GradeRef
    deviation: float
    suggested: GradeRef

    def as_dict(self) -> dict:
        return {
            "row": self.row,
            "col": self.col,
            "current": self.current.as_dict(),
            "deviation": self.deviation,
            "suggested": self.suggested.as_dict(),
        }


@dataclass(frozen=True)
class ConsistencyReport:
    """Consistency verdict for one matrix of one decision maker."""

    context_id: str
    decision_maker_id: str
    n: int
    lambda_max: float
    ci: float
    ri: float
    cr: float
    gamma: float
    identification: str
    direction: str
    advice: tuple[RevisionHint, ...] = field(default=())

    @property
    def accepted(self) -> bool:
        return self.direction == DR_ACCEPT

    @property
    def status_line(self) -> str:
        if self.accepted:
            return f"Since Consistency Ratio is <= {self.gamma:g}, Status: Acceptable"
        return (
            f"Since Consistency Ratio is > {self.gamma:g}, "
            "Status: Rejected, revise the flagged comparisons"
        )

    def as_dict(self) -> dict:
        return {
            "context_id": self.context_id,
            "decision_maker_id": self.decision_maker_id,
            "n": self.n,
            "lambda_max": self.lambda_max,
            "consistency_index": self.ci,
            "random_index": self.ri,
            "consistency_ratio": self.cr,
            "gamma": self.gamma,
            "identification": self.identification,
            "direction": self.direction,
            "accepted": self.accepted,
            "status": self.status_line,
            "advice": [h.as_dict() for h in self.advice],
        }


def revision_hints(
    crisp: CrispMatrix, weights: WeightVector, k: int = 3
) -> list[RevisionHint]:
    """The k upper-triangle comparisons deviating most from the derived weights.

    Deviation of cell (i, j) is ``|log(a_ij * w_j / w_i)|``: zero exactly when
    the judgment agrees with the weight ratio. The suggested grade is the
    scale entry closest to w_i / w_j.
    """
    w = weights.values
    scored: list[tuple[float, int, int]] = []
    n = crisp.n
    for i in range(n):
        for j in range(i + 1, n):
            deviation = abs(math.log(crisp.values[i, j] * w[j] / w[i]))
            scored.append((deviation, i, j))
    scored.sort(key=lambda t: (-t[0], t[1], t[2]))
    hints = []
    for deviation, i, j in scored[:k]:
        current_grade, current_inv = nearest_grade(float(crisp.values[i, j]))
        suggested_grade, suggested_inv = nearest_grade(w[i] / w[j])
        hints.append(
            RevisionHint(
                row=crisp.labels[i],
                col=crisp.labels[j],
                current=GradeRef(current_grade.label, current_inv),
                deviation=deviation,
                suggested=GradeRef(suggested_grade.label, suggested_inv),
            )
        )
    return hints


def evaluate_consistency(
    mat: FuzzyComparisonMatrix,
    gamma: float = DEFAULT_GAMMA,
    decision_maker_id: str = "",
    max_hints: int = 3,
) -> ConsistencyReport:
    """Full consistency check of one fuzzy judgment matrix.

    Defuzzifies the matrix, derives local weights, computes the consistency
    ratio and applies the identification and direction rules. Revision advice
    is produced only for rejected matrices.
    """
    if not 0.0 <= gamma <= MAX_GAMMA:
        raise InvalidThreshold(f"threshold must lie in [0, {MAX_GAMMA}], got {gamma}")
    crisp = defuzzify_matrix(mat)
    w = local_weights(mat)
    lam = lambda_max(crisp, w)
    ci = consistency_index(lam, mat.n)
    ri = random_index(mat.n)
    cr = consistency_ratio(ci, ri)
    rejected = cr > gamma
    advice = tuple(revision_hints(crisp, w, max_hints)) if rejected else ()
    return ConsistencyReport(
        context_id=mat.context_id,
        decision_maker_id=decision_maker_id,
        n=mat.n,
        lambda_max=lam,
        ci=ci,
        ri=ri,
        cr=cr,
        gamma=gamma,
        identification=IR_REJECTED if rejected else IR_ACCEPTED,
        direction=DR_REJECT_AND_MODIFY if rejected else DR_ACCEPT,
        advice=advice,
    )
