"""Exact currency parsing and formatting in integer minor units."""

import pytest

from fahpselect import format_amount, parse_amount


class TestParseAmount:
    @pytest.mark.parametrize(
        "text,minor",
        [
            ("143,034,460.84", 14_303_446_084),
            ("121,187,832.10", 12_118_783_210),
            ("397,299.03", 39_729_903),
            ("-1,468,495.12", -146_849_512),
            ("0.00", 0),
            ("5", 500),
            ("5.3", 530),
            ("+42.00", 4_200),
        ],
    )
    def test_values(self, text, minor):
        assert parse_amount(text) == minor

    def test_currency_marks_and_spacing_ignored(self):
        assert parse_amount("#143,034,460.84") == 14_303_446_084
        assert parse_amount("₦121,187,832.10") == 12_118_783_210
        assert parse_amount("  300_000_000.00 ") == 30_000_000_000

    @pytest.mark.parametrize("bad", ["", "abc", "1.234", "1..2", "1.2.3", "12a", "."])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_amount(bad)

    def test_never_rounds(self):
        # Three decimal places must be an error, not a silent rounding.
        with pytest.raises(ValueError):
            parse_amount("0.005")


class TestFormatAmount:
    @pytest.mark.parametrize(
        "minor,text",
        [
            (14_303_446_084, "143,034,460.84"),
            (-146_849_512, "-1,468,495.12"),
            (4_158_993_926, "41,589,939.26"),
            (0, "0.00"),
            (5, "0.05"),
            (-5, "-0.05"),
            (100, "1.00"),
        ],
    )
    def test_values(self, minor, text):
        assert format_amount(minor) == text

    @pytest.mark.parametrize(
        "minor", [0, 1, -1, 99, -99, 14_303_446_084, -2_184_662_874, 10**15]
    )
    def test_round_trip(self, minor):
        assert parse_amount(format_amount(minor)) == minor
