"""Plain-text report renderings of the main evaluation artifacts."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..consistency import ConsistencyReport
from ..financial import FinancialResult
from ..money import format_amount
from ..synthesis import SynthesisResult


def _table(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    body = [tuple(headers)] + [tuple(row) for row in rows]
    widths = [max(len(row[i]) for row in body) for i in range(len(headers))]
    lines = []
    for index, row in enumerate(body):
        lines.append(
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        )
        if index == 0:
            lines.append("  ".join("-" * width for width in widths))
    return "\n".join(lines)


def consistency_text(report: ConsistencyReport) -> str:
    """One matrix's verdict in the four-quantity layout plus the status line."""
    header = (
        f"Consistency check: {report.context_id}"
        + (f" ({report.decision_maker_id})" if report.decision_maker_id else "")
    )
    table = _table(
        ["Lambda Max", "Consistency Index", "Random Index", "Consistency Ratio"],
        [
            [
                f"{report.lambda_max:.10g}",
                f"{report.ci:.10g}",
                f"{report.ri:.10g}",
                f"{report.cr:.10g}",
            ]
        ],
    )
    lines = [header, table, report.status_line]
    if report.advice:
        lines.append("Revise first:")
        for hint in report.advice:
            lines.append(
                f"  {hint.row} vs {hint.col}: deviation {hint.deviation:.4f}, "
                f"suggested {hint.suggested.label}"
                + (" (inverted)" if hint.suggested.inverted else "")
            )
    return "\n".join(lines)


def ranking_text(synthesis: SynthesisResult) -> str:
    """Per-expert global weights, combined weights, ranks and the screening split."""
    headers = ["Alternative", *synthesis.decision_makers, "Final", "Rank"]
    rows = []
    for row in synthesis.table_rows():
        rows.append(
            [
                row["alternative"],
                *(f"{row['per_dm'][dm]:.8f}" for dm in synthesis.decision_makers),
                f"{row['final_weight']:.8f}",
                str(row["rank"]),
            ]
        )
    lines = [
        "Technical ranking",
        _table(headers, rows),
        f"Screening threshold (half of maximum): {synthesis.sigma:.8f}",
        f"Qualified: {', '.join(synthesis.qualified)}",
    ]
    if synthesis.screened_out:
        lines.append(f"Screened out: {', '.join(synthesis.screened_out)}")
    return "\n".join(lines)


def financial_text(result: FinancialResult) -> str:
    """Bid comparison against the estimate with the award line."""
    rows = [
        [
            row.contractor_id,
            format_amount(row.price_minor),
            format_amount(row.difference_minor),
        ]
        for row in result.rows
    ]
    lines = [
        "Financial evaluation",
        f"Estimate: {format_amount(result.estimate_minor)}",
        f"Bid security required: {'yes' if result.security_required else 'no'}",
        _table(["Contractor", "Bid", "Difference"], rows),
        f"Winner: {result.winner}",
    ]
    if len(result.tied) > 1:
        lines.append(f"Tied at the minimum: {', '.join(result.tied)}")
    return "\n".join(lines)


def case_study_text(run) -> str:
    """End-to-end narrative: prescreen, consistency, ranking and award."""
    prescreen = run.prescreen
    lines = [
        "Prescreening",
        f"Qualified ({len(prescreen.qualified)}): {', '.join(prescreen.qualified)}",
    ]
    if prescreen.disqualified:
        lines.append(f"Disqualified ({len(prescreen.disqualified)}):")
        for contractor_id, missing in prescreen.disqualified:
            lines.append(f"  {contractor_id}: missing {', '.join(missing)}")
    lines.append("")

    lines.append("Consistency checks")
    rows = []
    for dm in sorted(run.consistency):
        for context_id in sorted(run.consistency[dm]):
            report = run.consistency[dm][context_id]
            rows.append(
                [
                    dm,
                    context_id,
                    f"{report.lambda_max:.6f}",
                    f"{report.cr:.6f}",
                    "Acceptable" if report.accepted else "Rejected",
                ]
            )
    lines.append(
        _table(["Expert", "Context", "Lambda Max", "Consistency Ratio", "Status"], rows)
    )
    lines.append("")

    lines.append(ranking_text(run.synthesis))
    lines.append("")
    lines.append(financial_text(run.financial))
    return "\n".join(lines)
