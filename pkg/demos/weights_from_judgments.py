"""One fuzzy pairwise comparison, start to finish.

A single expert ranks four tender criteria on the nine-grade linguistic
scale. The script builds the reciprocal judgment matrix, derives triangular
fuzzy weights from row geometric means, defuzzifies and normalizes them, and
runs the consistency check. A second, contradictory submission shows the
rejection verdict and the revision advice that comes with it.

Run from the repository root:

    python3 demos/weights_from_judgments.py
"""

from fahpselect import (
    JudgmentEntry,
    JudgmentSubmission,
    evaluate_consistency,
    fuzzy_weight_vector,
    local_weights,
    matrix_from_submission,
    row_geometric_means,
)
from fahpselect.service import consistency_text

CRITERIA = ("Experience", "Finance", "Equipment", "Staff")

# Upper-triangle judgments only; reciprocals are filled in automatically.
# ``inverted=True`` flips a comparison, so the last entry below would read
# "Staff is moderately more important than Equipment" if it were inverted.
ENTRIES = (
    JudgmentEntry("Experience", "Finance", "Equally to Moderately Important"),
    JudgmentEntry("Experience", "Equipment", "Moderately Important"),
    JudgmentEntry("Experience", "Staff", "Strongly Important"),
    JudgmentEntry("Finance", "Equipment", "Equally to Moderately Important"),
    JudgmentEntry("Finance", "Staff", "Moderately Important"),
    JudgmentEntry("Equipment", "Staff", "Equally to Moderately Important"),
)


def show(submission: JudgmentSubmission) -> None:
    matrix = matrix_from_submission(submission, CRITERIA)

    print("Fuzzy judgment matrix")
    for label, row in zip(matrix.labels, matrix.cells):
        cells = "  ".join(f"({c.l:5.3f}, {c.m:5.3f}, {c.u:5.3f})" for c in row)
        print(f"  {label:<11} {cells}")

    fuzzy = fuzzy_weight_vector(row_geometric_means(matrix), labels=matrix.labels)
    crisp = local_weights(matrix)
    print("\nWeights (fuzzy, then defuzzified and normalized)")
    for label, w, v in zip(crisp.labels, fuzzy.weights, crisp.values):
        print(f"  {label:<11} ({w.l:.4f}, {w.m:.4f}, {w.u:.4f})  ->  {v:.4f}")

    report = evaluate_consistency(matrix, decision_maker_id="DM1")
    print()
    print(consistency_text(report))


coherent = JudgmentSubmission("DM1", "criteria", ENTRIES)
show(coherent)

# The same expert, but with the Experience/Staff comparison contradicting the
# chain Experience > Finance > Equipment > Staff. The check rejects the
# matrix and points at the judgments whose revision helps most.
contradictory = JudgmentSubmission(
    "DM1",
    "criteria",
    ENTRIES[:2]
    + (JudgmentEntry("Experience", "Staff", "Very Strongly Important", inverted=True),)
    + ENTRIES[3:],
)
print("\n" + "=" * 60 + "\n")
show(contradictory)
