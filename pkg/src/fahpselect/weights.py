"""Geometric-mean derivation of crisp local weights from a fuzzy matrix.

The chain is: row geometric means, fuzzy weight vector, centre-of-area
defuzzification, normalization. The normalized values are the local weights
of the compared elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateWeights
from .matrices import FuzzyComparisonMatrix
from .tfn import TFN

#: Weights below this would blow up the consistency ratio computation,
#: which divides by each weight.
MIN_WEIGHT = 1e-15


@dataclass(frozen=True)
class FuzzyWeightVector:
    labels: tuple[str, ...]
    weights: tuple[TFN, ...]


@dataclass(frozen=True)
class WeightVector:
    """Crisp nonnegative weights over decision elements."""

    labels: tuple[str, ...]
    values: tuple[float, ...]

    def __getitem__(self, label: str) -> float:
        return self.values[self.labels.index(label)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.values))


def _default_labels(count: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(count))


def row_geometric_means(mat: FuzzyComparisonMatrix) -> list[TFN]:
    """Componentwise n-th root of each row's cell product."""
    out = []
    for row in mat.cells:
        prod = TFN.crisp(1.0)
        for cell in row:
            prod = prod.mul(cell)
        out.append(prod.root(mat.n))
    return out


def fuzzy_weight_vector(
    rows: Sequence[TFN], labels: Sequence[str] | None = None
) -> FuzzyWeightVector:
    """Relative fuzzy weights: each row mean times the reversed reciprocal of their sum.

    Inverting the summation vector swaps its bounds, so the result is again
    a valid increasing triple.
    """
    total = rows[0]
    for r in rows[1:]:
        total = total.add(r)
    inv = total.reciprocal()
    weights = tuple(r.mul(inv) for r in rows)
    labels = tuple(labels) if labels is not None else _default_labels(len(rows))
    return FuzzyWeightVector(labels=labels, weights=weights)


def crisp_weights(fw: FuzzyWeightVector) -> WeightVector:
    """Centre-of-area defuzzification of each fuzzy weight (not yet normalized)."""
    return WeightVector(
        labels=fw.labels,
        values=tuple(w.defuzzify() for w in fw.weights),
    )


def normalize(
    wv: WeightVector | Sequence[float], labels: Sequence[str] | None = None
) -> WeightVector:
    """Scale weights to sum to one.

    Accepts a WeightVector or a plain sequence of values (``labels`` applies
    only to the latter). Raises DegenerateWeights when the total is zero or a
    normalized component vanishes below MIN_WEIGHT.
    """
    if isinstance(wv, WeightVector):
        raw_labels, raw = wv.labels, wv.values
    else:
        raw = tuple(wv)
        raw_labels = tuple(labels) if labels is not None else _default_labels(len(raw))
    total = sum(raw)
    if total <= 0:
        raise DegenerateWeights(f"weights sum to {total}, cannot normalize")
    values = tuple(v / total for v in raw)
    if any(v < MIN_WEIGHT for v in values):
        raise DegenerateWeights("a normalized weight vanished below 1e-15")
    return WeightVector(labels=raw_labels, values=values)


def local_weights(
    mat: FuzzyComparisonMatrix, divide_by_count: bool = False
) -> WeightVector:
    """Local weights of the compared elements, summing to one.

    ``divide_by_count`` additionally divides every weight by the element
    count. That variant does not sum to one and is kept only for comparison
    runs; the normalized form is the canonical local weight.
    """
    fw = fuzzy_weight_vector(row_geometric_means(mat), labels=mat.labels)
    wv = normalize(crisp_weights(fw))
    if divide_by_count:
        wv = WeightVector(
            labels=wv.labels, values=tuple(v / mat.n for v in wv.values)
        )
    return wv
