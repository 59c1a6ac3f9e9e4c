"""The project lifecycle engine: states, the revision loop, audit and replay.

A small tender is driven through every workflow stage by applying actions to
the engine, exactly as the HTTP service does. One expert first submits a
contradictory judgment set; the engine keeps it as a draft with revision
advice, the review stage reports it as outstanding, and the project goes
back for revision before the evaluation can run. At the end the script
verifies the audit trail and rebuilds an identical project by replaying it.

Run from the repository root:

    python3 demos/procurement_workflow.py
"""

from itertools import count

from fahpselect.errors import IncompleteJudgments
from fahpselect.service import ProjectEngine

HIERARCHY = {
    "goal": "Build the depot extension",
    "criteria": ["Capability", "Track record"],
    "sub_criteria": {
        "Capability": ["Equipment", "Staff"],
        "Track record": ["References"],
    },
    "alternatives": ["North Build", "Orient Civil", "Summit Works", "Valley Const"],
    "decision_makers": ["DM1", "DM2"],
}
DOSSIERS = {
    "North Build": ["Registration", "Insurance"],
    "Orient Civil": ["Registration", "Insurance"],
    "Summit Works": ["Registration", "Insurance"],
    "Valley Const": ["Insurance"],  # missing the mandatory registration
}
BIDS = {
    "North Build": "4,200,000.00",
    "Orient Civil": "3,900,000.00",
    "Summit Works": "4,050,000.00",
}

engine = ProjectEngine()
clock = count()


def apply(action, payload=None, actor="admin"):
    stamp = f"2026-08-14T09:00:00+00:00#{next(clock):04d}"
    result = engine.apply(action, payload or {}, actor, stamp)
    print(f"[{engine.project.state.value:<18}] {action}")
    return result


def equal_pairs(labels):
    return [
        {"row": labels[i], "col": labels[j], "grade": "Equally Important"}
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
    ]


# Stage 1: registration and prescreening. Valley Const lacks the mandatory
# registration document and drops out before any scoring happens.
apply(
    "create_project",
    {
        "project_id": "depot-2026",
        "title": "Depot extension",
        "hierarchy": HIERARCHY,
        "requirements": ["Registration", "Insurance"],
        "mandatory_requirements": ["Registration"],
        "gamma": 0.1,
        "estimate": "4,000,000.00",
    },
)
apply("open_prescreening")
for cid, submitted in DOSSIERS.items():
    apply("submit_dossier", {"contractor_id": cid, "submitted": submitted})
outcome = apply("run_prescreen")
print(f"  qualified: {outcome['qualified']}")
print(f"  disqualified: {outcome['disqualified']}")

# Stage 2: judgment collection. DM1's first submission for the alternatives
# under Equipment is an intransitive cycle (each contractor vastly better
# than the next, wrapping around), so the engine keeps it as a draft.
alts = list(engine.project.hierarchy.alternatives)
cyclic = [
    {"row": alts[0], "col": alts[1], "grade": "Extremely Important"},
    {"row": alts[1], "col": alts[2], "grade": "Extremely Important"},
    {"row": alts[0], "col": alts[2], "grade": "Extremely Important", "inverted": True},
]
draft = apply(
    "submit_judgment",
    {
        "decision_maker_id": "DM1",
        "context_id": "alternatives:Equipment",
        "entries": cyclic,
    },
    actor="DM1",
)
report = draft["report"]
print(f"  status: {draft['status']} (CR {report['consistency_ratio']:.4f} > {report['gamma']:g})")
for hint in report["advice"]:
    print(f"  advice: revise {hint['row']} vs {hint['col']} -> {hint['suggested']['grade']}")

for dm in ("DM1", "DM2"):
    for ctx in engine.project.contexts():
        if len(ctx.labels) < 2:
            continue  # single-element contexts need no comparisons
        if dm == "DM1" and ctx.context_id == "alternatives:Equipment":
            continue  # the draft from above still sits here
        apply(
            "submit_judgment",
            {
                "decision_maker_id": dm,
                "context_id": ctx.context_id,
                "entries": equal_pairs(ctx.labels),
            },
            actor=dm,
        )

# Stage 3: the review finds the draft, the evaluation refuses to run, and
# the project goes back to collection for one corrected resubmission.
review = apply("review_consistency")
print(f"  outstanding: {review['outstanding']}")
try:
    apply("run_technical_evaluation")
except IncompleteJudgments as exc:
    print(f"  evaluation refused: {exc}")
apply("return_for_revision")
apply(
    "submit_judgment",
    {
        "decision_maker_id": "DM1",
        "context_id": "alternatives:Equipment",
        "entries": equal_pairs(alts),
    },
    actor="DM1",
)
review = apply("review_consistency")
print(f"  ready: {review['ready']}")

# Stage 4: ranking, screening, bids, award. The equal judgments tie the
# technical ranking, so the cheapest compliant bid decides.
apply("run_technical_evaluation")
apply("apply_screening")
apply("open_financial")
for cid, price in BIDS.items():
    apply("submit_bid", {"contractor_id": cid, "price": price})
award = apply("run_financial_evaluation")
print(f"  winner: {award['financial']['winner']}")

# The audit trail is the only persistent artifact. Replaying it from scratch
# must rebuild the exact same project.
engine.audit.verify()
clone = ProjectEngine.replay(engine.audit)
print(f"\nAudit records: {len(engine.audit)}, digests verified")
same = clone.project.as_dict() == engine.project.as_dict()
print(f"Replay rebuilds identical state: {same}")
