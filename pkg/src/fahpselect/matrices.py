"""Fuzzy pairwise comparison matrices.

Decision makers enter only the strict upper triangle of a comparison
context; the diagonal and the lower triangle are machine-generated, which
removes the most common source of reciprocity errors. Aggregation across
experts and defuzzification to a crisp matrix also live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicatePair,
    LabelMismatch,
    MissingPair,
    UnknownElement,
)
from .scale import grade_tfn
from .tfn import TFN

#: Relative tolerance for the fuzzy reciprocity invariant.
RECIPROCITY_RTOL = 1e-12

_ONE = TFN(1.0, 1.0, 1.0)


@dataclass(frozen=True)
class FuzzyComparisonMatrix:
    """Square reciprocal matrix of TFNs for one comparison context."""

    context_id: str
    labels: tuple[str, ...]
    cells: tuple[tuple[TFN, ...], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def cell(self, row: int | str, col: int | str) -> TFN:
        """Cell by integer position or element label."""
        i = row if isinstance(row, int) else self.index_of(row)
        j = col if isinstance(col, int) else self.index_of(col)
        return self.cells[i][j]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownElement(f"{label!r} is not in context {self.context_id!r}") from None


@dataclass(frozen=True, eq=False)
class CrispMatrix:
    """Defuzzified judgment matrix; reciprocity holds exactly by construction."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class JudgmentEntry:
    """One upper-triangle comparison: row element vs column element."""

    row: str
    col: str
    grade: str
    inverted: bool = False


@dataclass(frozen=True)
class JudgmentSubmission:
    """All upper-triangle entries one decision maker supplies for one context."""

    decision_maker_id: str
    context_id: str
    entries: tuple[JudgmentEntry, ...]
    submitted_at: str = ""


@dataclass(frozen=True)
class Violation:
    kind: str  # "diagonal" | "reciprocity" | "ordering"
    row: int
    col: int
    message: str


@dataclass(frozen=True)
class MatrixValidation:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def matrix_from_submission(
    submission: JudgmentSubmission, labels: Sequence[str]
) -> FuzzyComparisonMatrix:
    """Build the full reciprocal matrix from upper-triangle judgments.

    An entry given in (col, row) order is normalized by flipping its inverted
    flag, so file-based submissions do not have to care about label order.
    """
    labels = tuple(labels)
    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)

    upper: dict[tuple[int, int], TFN] = {}
    for entry in submission.entries:
        if entry.row not in index:
            raise UnknownElement(
                f"{entry.row!r} is not in context {submission.context_id!r}"
            )
        if entry.col not in index:
            raise UnknownElement(
                f"{entry.col!r} is not in context {submission.context_id!r}"
            )
        i, j = index[entry.row], index[entry.col]
        if i == j:
            raise DuplicatePair(f"{entry.row!r} compared against itself")
        inverted = entry.inverted
        if i > j:
            i, j, inverted = j, i, not inverted
        if (i, j) in upper:
            raise DuplicatePair(f"pair ({labels[i]!r}, {labels[j]!r}) entered twice")
        upper[(i, j)] = grade_tfn(entry.grade, inverted)

    missing = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in upper
    ]
    if missing:
        raise MissingPair(f"missing comparisons: {missing}")

    cells = [[_ONE] * n for _ in range(n)]
    for (i, j), value in upper.items():
        cells[i][j] = value
        cells[j][i] = value.reciprocal()
    return FuzzyComparisonMatrix(
        context_id=submission.context_id,
        labels=labels,
        cells=tuple(tuple(row) for row in cells),
    )


def _close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


def validate_matrix(mat: FuzzyComparisonMatrix) -> MatrixValidation:
    """Check diagonal, reciprocity and component-ordering invariants.

    Returns a verdict carrying every violation with its cell coordinates;
    an empty list means the matrix is valid.
    """
    violations: list[Violation] = []
    n = mat.n
    for i in range(n):
        if mat.cells[i][i] != _ONE:
            violations.append(
                Violation("diagonal", i, i, f"diagonal cell is {mat.cells[i][i]}, expected (1, 1, 1)")
            )
    for i in range(n):
        for j in range(n):
            cell = mat.cells[i][j]
            if not (cell.l <= cell.m <= cell.u):
                violations.append(
                    Violation("ordering", i, j, f"components out of order: {cell}")
                )
    for i in range(n):
        for j in range(i + 1, n):
            upper, lower = mat.cells[i][j], mat.cells[j][i]
            if upper.l <= 0 or lower.l <= 0:
                violations.append(
                    Violation("reciprocity", j, i, f"non-positive judgment at ({i}, {j})")
                )
                continue
            expect = upper.reciprocal()
            if not all(
                _close(a, b, RECIPROCITY_RTOL)
                for a, b in zip(lower.as_tuple(), expect.as_tuple())
            ):
                violations.append(
                    Violation(
                        "reciprocity", j, i,
                        f"cell ({j}, {i}) is {lower}, expected reciprocal {expect}",
                    )
                )
    return MatrixValidation(tuple(violations))


def aggregate_experts(
    mats: Sequence[FuzzyComparisonMatrix],
) -> FuzzyComparisonMatrix:
    """Componentwise geometric mean of the same context across experts.

    The lower triangle is rebuilt as exact reciprocals of the aggregated
    upper triangle, so the output satisfies the reciprocity invariant even
    after floating-point roots.
    """
    if not mats:
        raise DimensionMismatch("need at least one matrix to aggregate")
    first = mats[0]
    for mat in mats[1:]:
        if mat.n != first.n:
            raise DimensionMismatch(
                f"matrix dimensions differ: {mat.n} vs {first.n}"
            )
        if mat.labels != first.labels:
            raise LabelMismatch(
                f"matrix labels differ: {mat.labels} vs {first.labels}"
            )
    z = len(mats)
    n = first.n
    cells = [[_ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            prod = TFN.crisp(1.0)
            for mat in mats:
                prod = prod.mul(mat.cells[i][j])
            agg = prod.root(z)
            cells[i][j] = agg
            cells[j][i] = agg.reciprocal()
    return FuzzyComparisonMatrix(
        context_id=first.context_id,
        labels=first.labels,
        cells=tuple(tuple(row) for row in cells),
    )


def defuzzify_matrix(mat: FuzzyComparisonMatrix) -> CrispMatrix:
    """Centre-of-area defuzzification with forced crisp reciprocity.

    Only the upper triangle is defuzzified; the lower triangle is rebuilt as
    exact reciprocals. Mirroring matters: the centre of area of a reciprocal
    TFN is not the reciprocal of the centre of area, and without the rebuild
    an all-indifference matrix would not have its dimension as eigenvalue.
    """
    n = mat.n
    values = np.ones((n, n), dtype=float)
    for i in range(n):
        for j in range(i + 1, n):
            c = mat.cells[i][j].defuzzify()
            values[i, j] = c
            values[j, i] = 1.0 / c
    return CrispMatrix(labels=mat.labels, values=values)
