"""Command-line entry points.

Verbs:

- ``evaluate``          run the full pipeline on a data directory (or the
                        packaged example) and print or write the reports
- ``check-consistency`` judge a single comparison matrix file; exit code 1
                        when the matrix is rejected
- ``case-study``        print the packaged end-to-end worked example
- ``serve``             start the HTTP service

Environment defaults for ``serve``: ``FAHPSELECT_HOST``, ``FAHPSELECT_PORT``,
``FAHPSELECT_STORE``, ``FAHPSELECT_TOKENS``, ``FAHPSELECT_GAMMA``,
``FAHPSELECT_SECURITY_THRESHOLD`` and ``FAHPSELECT_CORS``.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from pathlib import Path

from .casestudy import load_case_study, run_case_study
from .consistency import DEFAULT_GAMMA, evaluate_consistency
from .errors import FahpError
from .matrices import JudgmentEntry, JudgmentSubmission, matrix_from_submission
from .money import parse_amount
from .service.reports import (
    case_study_text,
    consistency_text,
    financial_text,
    ranking_text,
)


def _cmd_evaluate(args: argparse.Namespace) -> int:
    case = load_case_study(args.data)
    run = run_case_study(case)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        reports = []
        for dm in sorted(run.consistency):
            for context_id in sorted(run.consistency[dm]):
                reports.append(consistency_text(run.consistency[dm][context_id]))
        (out / "consistency.txt").write_text("\n\n".join(reports) + "\n")
        (out / "ranking.txt").write_text(ranking_text(run.synthesis) + "\n")
        (out / "financial.txt").write_text(financial_text(run.financial) + "\n")
        result = {
            "project_id": case.project.project_id,
            "title": case.project.title,
            "prescreen": {
                "qualified": list(run.prescreen.qualified),
                "disqualified": [
                    {"contractor_id": cid, "missing": list(missing)}
                    for cid, missing in run.prescreen.disqualified
                ],
            },
            "consistency": [
                run.consistency[dm][ctx].as_dict()
                for dm in sorted(run.consistency)
                for ctx in sorted(run.consistency[dm])
            ],
            "technical": run.synthesis.as_dict(),
            "financial": run.financial.as_dict(),
        }
        (out / "result.json").write_text(json.dumps(result, indent=2) + "\n")
        print(f"Reports written to {out}")
    else:
        print(case_study_text(run))
    return 0


def _cmd_check_consistency(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.matrix).read_text(encoding="utf-8"))
    submission = JudgmentSubmission(
        decision_maker_id=doc.get("decision_maker_id", ""),
        context_id=doc.get("context_id", "matrix"),
        entries=tuple(
            JudgmentEntry(
                row=entry["row"],
                col=entry["col"],
                grade=entry["grade"],
                inverted=entry.get("inverted", False),
            )
            for entry in doc.get("entries", ())
        ),
    )
    matrix = matrix_from_submission(submission, doc["labels"])
    report = evaluate_consistency(
        matrix, gamma=args.gamma, decision_maker_id=submission.decision_maker_id
    )
    print(consistency_text(report))
    return 0 if report.accepted else 1


def _cmd_case_study(args: argparse.Namespace) -> int:
    print(case_study_text(run_case_study()))
    return 0


def _load_tokens(path: str | None):
    from .service.api import Principal

    if path:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        return {
            token: Principal(name=spec["name"], role=spec["role"])
            for token, spec in doc.items()
        }
    token = secrets.token_urlsafe(16)
    print(f"No token file given; generated admin token: {token}", file=sys.stderr)
    return {token: Principal(name="admin", role="admin")}


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.api import ServiceConfig, create_app
    from .service.store import FileStore, MemoryStore

    store = FileStore(args.store) if args.store else MemoryStore()
    origins = tuple(o.strip() for o in args.cors.split(",") if o.strip()) if args.cors else ()
    config = ServiceConfig(
        store=store,
        tokens=_load_tokens(args.tokens),
        default_gamma=args.gamma,
        default_security_threshold_minor=parse_amount(args.security_threshold),
        cors_origins=origins,
    )
    uvicorn.run(create_app(config), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fahpselect",
        description="Group fuzzy multi-criteria contractor selection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    evaluate = sub.add_parser(
        "evaluate", help="run the full pipeline on a data directory"
    )
    evaluate.add_argument(
        "--data",
        help="directory with project.json, hierarchy.json, dossiers.json, "
        "bids.json and judgments/ (default: the packaged example)",
    )
    evaluate.add_argument("--out", help="write reports into this directory")
    evaluate.set_defaults(func=_cmd_evaluate)

    check = sub.add_parser(
        "check-consistency", help="judge one comparison matrix file"
    )
    check.add_argument("matrix", help="JSON file with labels and judgment entries")
    check.add_argument(
        "--gamma",
        type=float,
        default=float(os.environ.get("FAHPSELECT_GAMMA", DEFAULT_GAMMA)),
        help="consistency threshold (default %(default)s)",
    )
    check.set_defaults(func=_cmd_check_consistency)

    case = sub.add_parser("case-study", help="print the packaged worked example")
    case.set_defaults(func=_cmd_case_study)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default=os.environ.get("FAHPSELECT_HOST", "127.0.0.1"))
    serve.add_argument(
        "--port", type=int, default=int(os.environ.get("FAHPSELECT_PORT", "8000"))
    )
    serve.add_argument(
        "--store",
        default=os.environ.get("FAHPSELECT_STORE"),
        help="directory for the file-backed project store (default: in-memory)",
    )
    serve.add_argument(
        "--tokens",
        default=os.environ.get("FAHPSELECT_TOKENS"),
        help="JSON file mapping bearer tokens to principals",
    )
    serve.add_argument(
        "--gamma",
        type=float,
        default=float(os.environ.get("FAHPSELECT_GAMMA", DEFAULT_GAMMA)),
    )
    serve.add_argument(
        "--cors",
        default=os.environ.get("FAHPSELECT_CORS", ""),
        help="comma-separated origins allowed to call the API from a browser",
    )
    serve.add_argument(
        "--security-threshold",
        default=os.environ.get("FAHPSELECT_SECURITY_THRESHOLD", "300,000,000.00"),
    )
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FahpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
