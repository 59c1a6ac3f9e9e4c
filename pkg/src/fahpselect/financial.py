"""Bid-price stage over the technically qualified contractors.

Each qualified bid is compared against the owner's estimate; the contractor
with the smallest difference (equivalently, the lowest bid) wins the award.
All arithmetic is exact integer minor units.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import MissingBids, MissingBidSecurity, UnknownContractor
from .money import format_amount

#: Estimates at or above this require a bid security document (major units 300,000,000.00).
DEFAULT_SECURITY_THRESHOLD_MINOR = 300_000_000_00


@dataclass(frozen=True)
class Bid:
    contractor_id: str
    price_minor: int
    security_document: str | None = None

    def __post_init__(self) -> None:
        if self.price_minor <= 0:
            raise ValueError(f"bid price must be positive, got {self.price_minor}")


@dataclass(frozen=True)
class BidRow:
    contractor_id: str
    price_minor: int
    difference_minor: int


@dataclass(frozen=True)
class FinancialResult:
    estimate_minor: int
    rows: tuple[BidRow, ...]
    winner: str
    security_required: bool
    tied: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "estimate": format_amount(self.estimate_minor),
            "security_required": self.security_required,
            "rows": [
                {
                    "contractor_id": row.contractor_id,
                    "bid": format_amount(row.price_minor),
                    "difference": format_amount(row.difference_minor),
                }
                for row in self.rows
            ],
            "winner": self.winner,
            "tied": list(self.tied),
        }


def bid_security_required(
    estimate_minor: int, threshold_minor: int = DEFAULT_SECURITY_THRESHOLD_MINOR
) -> bool:
    """Whether the estimate is large enough to demand bid security (boundary inclusive)."""
    if estimate_minor <= 0:
        raise ValueError(f"estimate must be positive, got {estimate_minor}")
    return estimate_minor >= threshold_minor


def compute_differences(
    estimate_minor: int, bids: Sequence[Bid], qualified: Iterable[str]
) -> dict[str, int]:
    """Bid minus estimate per contractor, exact in minor units.

    Every bid must come from the technically qualified set.
    """
    allowed = set(qualified)
    if not bids:
        raise MissingBids("no bids to evaluate")
    out: dict[str, int] = {}
    for bid in bids:
        if bid.contractor_id not in allowed:
            raise UnknownContractor(
                f"bid from {bid.contractor_id!r}, which is not in the qualified set"
            )
        out[bid.contractor_id] = bid.price_minor - estimate_minor
    return out


def select_winner(diffs: Mapping[str, int]) -> tuple[str, tuple[str, ...]]:
    """Contractor with the minimum difference; ties go to the lexicographically first id.

    Returns the winner and the full tied group (single element when unique)
    so a tie is never silent.
    """
    if not diffs:
        raise MissingBids("no differences to select from")
    best = min(diffs.values())
    tied = tuple(sorted(cid for cid, d in diffs.items() if d == best))
    return tied[0], tied


def evaluate_bids(
    estimate_minor: int,
    bids: Sequence[Bid],
    qualified: Sequence[str],
    security_threshold_minor: int = DEFAULT_SECURITY_THRESHOLD_MINOR,
) -> FinancialResult:
    """Full financial stage: differences, security gate and award selection.

    Requires a bid from every qualified contractor. Rows come out in the
    order of ``qualified`` (normally the technical ranking order).
    """
    by_contractor = {bid.contractor_id: bid for bid in bids}
    missing = [cid for cid in qualified if cid not in by_contractor]
    if missing:
        raise MissingBids(f"missing bids from: {missing}")

    required = bid_security_required(estimate_minor, security_threshold_minor)
    if required:
        undocumented = [b.contractor_id for b in bids if not b.security_document]
        if undocumented:
            raise MissingBidSecurity(
                f"bid security documents missing from: {undocumented}"
            )

    diffs = compute_differences(estimate_minor, bids, qualified)
    winner, tied = select_winner(diffs)
    rows = tuple(
        BidRow(
            contractor_id=cid,
            price_minor=by_contractor[cid].price_minor,
            difference_minor=diffs[cid],
        )
        for cid in qualified
    )
    return FinancialResult(
        estimate_minor=estimate_minor,
        rows=rows,
        winner=winner,
        security_required=required,
        tied=tied if len(tied) > 1 else (),
    )
