"""Shared helpers for the test suite: matrix builders and random generators."""

from __future__ import annotations

import numpy as np

from fahpselect import (
    SCALE,
    FuzzyComparisonMatrix,
    JudgmentEntry,
    JudgmentSubmission,
    matrix_from_submission,
)


def build_matrix(labels, entries, context="test", dm="dm1"):
    """Matrix from (row, col, grade_label, inverted) upper-triangle tuples."""
    submission = JudgmentSubmission(
        decision_maker_id=dm,
        context_id=context,
        entries=tuple(JudgmentEntry(*e) for e in entries),
    )
    return matrix_from_submission(submission, labels)


def indifference_matrix(n, context="test"):
    """All comparisons 'Equally Important'."""
    labels = tuple(f"E{i + 1}" for i in range(n))
    entries = [
        (labels[i], labels[j], "Equally Important", False)
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return build_matrix(labels, entries, context=context)


def random_judgment_matrix(rng: np.random.Generator, n: int, context="random"):
    """Random reciprocal fuzzy matrix drawn from the nine-grade scale."""
    labels = tuple(f"E{i + 1}" for i in range(n))
    entries = []
    for i in range(n):
        for j in range(i + 1, n):
            g = SCALE[rng.integers(0, len(SCALE))]
            inverted = bool(rng.integers(0, 2)) and g.saaty_value > 1
            entries.append((labels[i], labels[j], g.label, inverted))
    return build_matrix(labels, entries, context=context)


def consistent_ratio_matrix(priorities, labels=None, context="consistent"):
    """Crisp consistent fuzzy matrix with cells p_i / p_j (all components equal)."""
    from fahpselect import TFN

    n = len(priorities)
    labels = tuple(labels) if labels else tuple(f"E{i + 1}" for i in range(n))
    cells = tuple(
        tuple(TFN.crisp(priorities[i] / priorities[j]) for j in range(n))
        for i in range(n)
    )
    return FuzzyComparisonMatrix(context_id=context, labels=labels, cells=cells)
