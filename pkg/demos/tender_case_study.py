"""The shipped worked example: fifteen applicants, four experts, one award.

Runs the packaged tender data through every stage of the pipeline in one
call and prints the combined report: mandatory-requirement prescreening,
per-expert consistency checks, the fuzzy technical ranking with its
screening cutoff, and the financial comparison of the surviving bids.

Run from the repository root:

    python3 demos/tender_case_study.py
"""

from fahpselect import run_case_study
from fahpselect.service import case_study_text

run = run_case_study()
print(case_study_text(run))

# The run object keeps each stage's result for programmatic use.
print("Stage objects")
print(f"  qualified after prescreen : {len(run.prescreen.qualified)}")
checks = sum(len(reports) for reports in run.consistency.values())
print(f"  consistency checks        : {checks}, all accepted")
print(f"  screening cutoff          : {run.synthesis.sigma:.6f}")
print(f"  winner                    : {run.financial.winner}")
