"""Hierarchy structure, comparison contexts, and mandatory-requirement prescreen."""

import pytest

from fahpselect import (
    CRITERIA_CONTEXT,
    BidderDossier,
    DecisionHierarchy,
    InvalidHierarchy,
    alternatives_context,
    prescreen_mandatory,
    subcriteria_context,
)


def sample_hierarchy():
    return DecisionHierarchy(
        goal="Select the best contractor",
        criteria=("K1", "K2"),
        sub_criteria={"K1": ("S1", "S2"), "K2": ("S3",)},
        alternatives=("A", "B", "C"),
        decision_makers=("dm1", "dm2"),
    )


class TestValidation:
    def test_valid_hierarchy_passes(self):
        sample_hierarchy().validate()

    def test_needs_two_criteria(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1",),
            sub_criteria={"K1": ("S1",)},
            alternatives=("A", "B"),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_needs_two_alternatives(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K2": ("S2",)},
            alternatives=("A",),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_needs_a_decision_maker(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K2": ("S2",)},
            alternatives=("A", "B"),
            decision_makers=(),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_sub_criteria_keys_must_match_criteria(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K3": ("S2",)},
            alternatives=("A", "B"),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_every_criterion_has_a_sub_criterion(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K2": ()},
            alternatives=("A", "B"),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_duplicate_sub_criteria_rejected(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K2": ("S1",)},
            alternatives=("A", "B"),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()

    def test_duplicate_alternatives_rejected(self):
        h = DecisionHierarchy(
            goal="g",
            criteria=("K1", "K2"),
            sub_criteria={"K1": ("S1",), "K2": ("S2",)},
            alternatives=("A", "A"),
            decision_makers=("dm1",),
        )
        with pytest.raises(InvalidHierarchy):
            h.validate()


class TestNavigation:
    def test_all_sub_criteria_flattens_in_criteria_order(self):
        assert sample_hierarchy().all_sub_criteria() == ("S1", "S2", "S3")

    def test_criterion_of(self):
        h = sample_hierarchy()
        assert h.criterion_of("S1") == "K1"
        assert h.criterion_of("S3") == "K2"

    def test_criterion_of_unknown(self):
        with pytest.raises(InvalidHierarchy):
            sample_hierarchy().criterion_of("S9")

    def test_contexts_cover_every_comparison(self):
        h = sample_hierarchy()
        ctx = h.contexts()
        assert [c.context_id for c in ctx] == [
            CRITERIA_CONTEXT,
            subcriteria_context("K1"),
            subcriteria_context("K2"),
            alternatives_context("S1"),
            alternatives_context("S2"),
            alternatives_context("S3"),
        ]
        assert ctx[0].labels == ("K1", "K2")
        assert ctx[1].labels == ("S1", "S2")
        assert ctx[3].labels == ("A", "B", "C")

    def test_context_labels_lookup(self):
        h = sample_hierarchy()
        assert h.context_labels(alternatives_context("S3")) == ("A", "B", "C")
        with pytest.raises(InvalidHierarchy):
            h.context_labels("alternatives:S9")

    def test_with_alternatives_replaces_list(self):
        h = sample_hierarchy().with_alternatives(["B", "C"])
        assert h.alternatives == ("B", "C")
        assert h.criteria == ("K1", "K2")


class TestSerialization:
    def test_round_trip(self):
        h = sample_hierarchy()
        assert DecisionHierarchy.from_dict(h.as_dict()) == h

    def test_from_dict_validates(self):
        doc = sample_hierarchy().as_dict()
        doc["criteria"] = ["K1"]
        doc["sub_criteria"] = {"K1": ["S1"]}
        with pytest.raises(InvalidHierarchy):
            DecisionHierarchy.from_dict(doc)


REQUIREMENTS = tuple(f"R{i:02d}" for i in range(1, 16))
MANDATORY = frozenset(REQUIREMENTS[:10])


def dossier(cid, submitted):
    return BidderDossier(
        contractor_id=cid, submitted=frozenset(submitted), mandatory=MANDATORY
    )


class TestPrescreen:
    def test_full_submission_qualifies(self):
        outcome = prescreen_mandatory([dossier("C1", REQUIREMENTS)])
        assert outcome.qualified == ("C1",)
        assert outcome.disqualified == ()

    def test_missing_mandatory_disqualifies_with_reasons(self):
        outcome = prescreen_mandatory(
            [dossier("C1", REQUIREMENTS[2:])]  # missing R01 and R02
        )
        assert outcome.qualified == ()
        assert outcome.disqualified == (("C1", ("R01", "R02")),)

    def test_missing_only_optional_slots_still_qualifies(self):
        outcome = prescreen_mandatory([dossier("C1", REQUIREMENTS[:10])])
        assert outcome.qualified == ("C1",)

    def test_fifteen_bidders_six_deficient_gives_nine(self):
        dossiers = [
            dossier(f"Contractor {i}", REQUIREMENTS) for i in range(1, 10)
        ] + [
            dossier(f"Contractor {i}", REQUIREMENTS[1:]) for i in range(10, 16)
        ]
        outcome = prescreen_mandatory(dossiers)
        assert len(dossiers) == 15
        assert len(outcome.qualified) == 9
        assert len(outcome.disqualified) == 6
        assert all(missing == ("R01",) for _, missing in outcome.disqualified)

    def test_input_order_preserved(self):
        dossiers = [
            dossier("C3", REQUIREMENTS),
            dossier("C1", REQUIREMENTS[1:]),
            dossier("C2", REQUIREMENTS),
        ]
        outcome = prescreen_mandatory(dossiers)
        assert outcome.qualified == ("C3", "C2")
        assert outcome.disqualified[0][0] == "C1"
