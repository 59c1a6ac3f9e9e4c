"""Exact currency handling in integer minor units.

Amounts are parsed from decimal strings straight into integer minor units
(two decimals) and never pass through binary floating point, so bid
differences reconstruct to the last minor unit.
"""

from __future__ import annotations

import re

_AMOUNT_RE = re.compile(r"^[+-]?\d+(\.\d{1,2})?$")
_STRIP = str.maketrans("", "", ",_ ₦#")  # thousands separators and currency marks


def parse_amount(text: str) -> int:
    """Parse a decimal currency string into integer minor units.

    Accepts thousands separators and a leading currency mark; rejects more
    than two decimal places rather than rounding.
    """
    cleaned = text.strip().translate(_STRIP)
    if not _AMOUNT_RE.match(cleaned):
        raise ValueError(f"not a valid currency amount: {text!r}")
    sign = -1 if cleaned.startswith("-") else 1
    cleaned = cleaned.lstrip("+-")
    if "." in cleaned:
        units, cents = cleaned.split(".")
        cents = cents.ljust(2, "0")
    else:
        units, cents = cleaned, "00"
    return sign * (int(units) * 100 + int(cents))


def format_amount(minor: int) -> str:
    """Render minor units as a grouped decimal string, e.g. -1,468,495.12."""
    sign = "-" if minor < 0 else ""
    units, cents = divmod(abs(minor), 100)
    return f"{sign}{units:,}.{cents:02d}"
