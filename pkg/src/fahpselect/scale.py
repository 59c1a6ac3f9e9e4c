"""The nine-grade linguistic scale every pairwise comparison is drawn from."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import UnknownGrade
from .tfn import TFN


@dataclass(frozen=True, slots=True)
class LinguisticGrade:
    """One row of the judgment scale: label, Saaty value, TFN and its reciprocal."""

    label: str
    saaty_value: int
    tfn: TFN
    reciprocal_tfn: TFN


def _grade(label: str, saaty: int, l: float, m: float, u: float) -> LinguisticGrade:
    t = TFN(l, m, u)
    return LinguisticGrade(label, saaty, t, t.reciprocal())


#: The full scale, mildest to strongest. Grade 9 is deliberately (8, 9, 9):
#: the upper bound saturates at the top of the scale.
SCALE: tuple[LinguisticGrade, ...] = (
    _grade("Equally Important", 1, 1, 1, 1),
    _grade("Equally to Moderately Important", 2, 1, 2, 3),
    _grade("Moderately Important", 3, 2, 3, 4),
    _grade("Moderately to Strongly Important", 4, 3, 4, 5),
    _grade("Strongly Important", 5, 4, 5, 6),
    _grade("Strongly to Very Strongly Important", 6, 5, 6, 7),
    _grade("Very Strongly Important", 7, 6, 7, 8),
    _grade("Very Strongly to Extremely Important", 8, 7, 8, 9),
    _grade("Extremely Important", 9, 8, 9, 9),
)

_BY_LABEL = {g.label.lower(): g for g in SCALE}
_BY_SAATY = {g.saaty_value: g for g in SCALE}


def grade(label: str) -> LinguisticGrade:
    """Look a grade up by its label (case-insensitive)."""
    try:
        return _BY_LABEL[label.strip().lower()]
    except KeyError:
        raise UnknownGrade(f"unknown linguistic grade: {label!r}") from None


def grade_by_saaty(value: int) -> LinguisticGrade:
    try:
        return _BY_SAATY[value]
    except KeyError:
        raise UnknownGrade(f"no grade with Saaty value {value}") from None


def grade_tfn(label: str, inverted: bool = False) -> TFN:
    """The judgment value for a grade, reciprocal form when ``inverted``."""
    g = grade(label)
    return g.reciprocal_tfn if inverted else g.tfn


def nearest_grade(ratio: float) -> tuple[LinguisticGrade, bool]:
    """Grade (and inversion flag) whose defuzzified value best matches a crisp ratio.

    Considers all nine grades in both direct and reciprocal form. Ties prefer
    the milder grade and the direct orientation, which keeps suggestions
    deterministic.
    """
    if not math.isfinite(ratio) or ratio <= 0:
        raise ValueError(f"ratio must be a positive finite number, got {ratio}")
    candidates: list[tuple[float, int, bool, LinguisticGrade]] = []
    for g in SCALE:
        candidates.append((abs(g.tfn.defuzzify() - ratio), g.saaty_value, False, g))
        if g.saaty_value > 1:
            candidates.append(
                (abs(g.reciprocal_tfn.defuzzify() - ratio), g.saaty_value, True, g)
            )
    dist, _, inverted, best = min(candidates, key=lambda c: (c[0], c[1], c[2]))
    return best, inverted
