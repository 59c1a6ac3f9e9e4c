"""Weight synthesis, final ranking and the screening gate, checked against the
published nine-contractor group result."""

import pytest

from fahpselect import (
    CRITERIA_CONTEXT,
    DecisionHierarchy,
    IncompleteCoverage,
    IncompleteJudgments,
    LabelMismatch,
    WeightVector,
    aggregated_local_weights,
    alternative_global_weight,
    alternatives_context,
    final_weights,
    global_subcriterion_weights,
    local_weights,
    rank,
    screen,
    subcriteria_context,
    synthesize,
)
from support import build_matrix

# Per-expert global weights of the nine contractors (four experts), and the
# published mean, ranking and screening outcome they must reproduce.
PER_DM_GLOBAL = {
    "Contractor 1": (0.00096814, 0.00077432, 0.00085770, 0.00270205),
    "Contractor 2": (0.00031455, 0.00068291, 0.00053683, 0.00064577),
    "Contractor 3": (0.00099848, 0.00075659, 0.00088892, 0.00280886),
    "Contractor 4": (0.00124313, 0.00072990, 0.00097547, 0.00254776),
    "Contractor 5": (0.00093518, 0.00080540, 0.00084524, 0.00047604),
    "Contractor 6": (0.00134322, 0.00109932, 0.00114998, 0.00083954),
    "Contractor 7": (0.00029252, 0.00030443, 0.00044826, 0.00028128),
    "Contractor 8": (0.00134321, 0.00110530, 0.00123356, 0.001038022),
    "Contractor 9": (0.00100309, 0.00104860, 0.00085054, 0.00048683),
}
EXPECTED_FINAL = {
    "Contractor 4": 0.001374,
    "Contractor 3": 0.001363,
    "Contractor 1": 0.001326,
    "Contractor 8": 0.001180,
    "Contractor 6": 0.001108,
    "Contractor 9": 0.000847,
    "Contractor 5": 0.000765,
    "Contractor 2": 0.000545,
    "Contractor 7": 0.000332,
}
EXPECTED_ORDER = tuple(EXPECTED_FINAL)


def per_dm_vectors():
    return [
        {alt: row[z] for alt, row in PER_DM_GLOBAL.items()} for z in range(4)
    ]


class TestGlobalSubcriterionWeights:
    def test_scales_by_criterion_weight(self):
        out = global_subcriterion_weights(
            0.316947, WeightVector(("S1",), (0.151994,))
        )
        assert out.values[0] == pytest.approx(0.048174, abs=1e-5)

    def test_unit_criterion_weight_is_identity(self):
        wv = WeightVector(("S1", "S2"), (0.7, 0.3))
        out = global_subcriterion_weights(1.0, wv)
        assert out.values == wv.values

    def test_zero_criterion_weight_zeroes_everything(self):
        out = global_subcriterion_weights(0.0, WeightVector(("S1", "S2"), (0.7, 0.3)))
        assert out.values == (0.0, 0.0)


class TestAlternativeGlobalWeight:
    def test_single_subcriterion_passthrough(self):
        out = alternative_global_weight(
            WeightVector(("S1",), (1.0,)),
            {"S1": WeightVector(("A", "B"), (0.6, 0.4))},
            n_sub=1,
        )
        assert out == {"A": pytest.approx(0.6), "B": pytest.approx(0.4)}

    def test_uniform_locals_give_uniform_globals(self):
        subs = WeightVector(("S1", "S2", "S3"), (0.5, 0.3, 0.2))
        locals_ = {
            s: WeightVector(("A", "B"), (0.5, 0.5)) for s in subs.labels
        }
        out = alternative_global_weight(subs, locals_, n_sub=3)
        expected = sum(subs.values) / (3 * 2)
        assert out["A"] == pytest.approx(expected, abs=1e-15)
        assert out["B"] == pytest.approx(expected, abs=1e-15)

    def test_missing_subcriterion_coverage(self):
        subs = WeightVector(("S1", "S2"), (0.5, 0.5))
        with pytest.raises(IncompleteCoverage):
            alternative_global_weight(
                subs, {"S1": WeightVector(("A", "B"), (0.6, 0.4))}, n_sub=2
            )

    def test_alternative_sets_must_match(self):
        subs = WeightVector(("S1", "S2"), (0.5, 0.5))
        with pytest.raises(LabelMismatch):
            alternative_global_weight(
                subs,
                {
                    "S1": WeightVector(("A", "B"), (0.6, 0.4)),
                    "S2": WeightVector(("A", "C"), (0.6, 0.4)),
                },
                n_sub=2,
            )

    def test_monotone_in_local_weight(self):
        subs = WeightVector(("S1", "S2"), (0.6, 0.4))
        low = {
            "S1": WeightVector(("A", "B"), (0.3, 0.7)),
            "S2": WeightVector(("A", "B"), (0.5, 0.5)),
        }
        high = {
            "S1": WeightVector(("A", "B"), (0.4, 0.6)),
            "S2": WeightVector(("A", "B"), (0.5, 0.5)),
        }
        raised = alternative_global_weight(subs, high, 2)["A"]
        base = alternative_global_weight(subs, low, 2)["A"]
        assert raised > base


class TestFinalWeights:
    def test_reproduces_published_means(self):
        final = final_weights(per_dm_vectors())
        for alt, expected in EXPECTED_FINAL.items():
            assert final[alt] == pytest.approx(expected, abs=5e-7), alt

    def test_single_expert_unchanged(self):
        only = per_dm_vectors()[0]
        assert final_weights([only]) == pytest.approx(only)

    def test_order_of_experts_is_irrelevant(self):
        vecs = per_dm_vectors()
        assert final_weights(vecs) == pytest.approx(final_weights(vecs[::-1]))

    def test_bounded_by_expert_extremes(self):
        final = final_weights(per_dm_vectors())
        for alt, row in PER_DM_GLOBAL.items():
            assert min(row) <= final[alt] <= max(row)

    def test_mismatched_alternatives(self):
        with pytest.raises(LabelMismatch):
            final_weights([{"A": 0.5}, {"B": 0.5}])

    def test_empty_input(self):
        with pytest.raises(LabelMismatch):
            final_weights([])


class TestRank:
    def test_published_ranking_order(self):
        ranking = rank(final_weights(per_dm_vectors()))
        assert tuple(r.alternative for r in ranking) == EXPECTED_ORDER
        assert [r.rank for r in ranking] == list(range(1, 10))

    def test_two_alternatives(self):
        ranking = rank({"A": 0.2, "B": 0.8})
        assert [(r.alternative, r.rank) for r in ranking] == [("B", 1), ("A", 2)]

    def test_all_equal_share_rank_one(self):
        ranking = rank({"B": 0.25, "A": 0.25, "C": 0.25})
        assert [(r.alternative, r.rank) for r in ranking] == [
            ("A", 1),
            ("B", 1),
            ("C", 1),
        ]

    def test_competition_ranking_after_tie(self):
        ranking = rank({"a": 0.5, "b": 0.3, "c": 0.3, "d": 0.1})
        assert [(r.alternative, r.rank) for r in ranking] == [
            ("a", 1),
            ("b", 2),
            ("c", 2),
            ("d", 4),
        ]


class TestScreen:
    def test_published_screening_outcome(self):
        outcome = screen(final_weights(per_dm_vectors()))
        assert outcome.sigma == pytest.approx(0.000687, abs=5e-7)
        assert outcome.qualified == EXPECTED_ORDER[:7]
        assert outcome.screened_out == ("Contractor 2", "Contractor 7")

    def test_single_alternative_qualifies(self):
        outcome = screen({"A": 0.4})
        assert outcome.qualified == ("A",)
        assert outcome.screened_out == ()

    def test_boundary_weight_qualifies(self):
        outcome = screen({"x": 1.0, "y": 0.5, "z": 0.49})
        assert outcome.sigma == pytest.approx(0.5)
        assert outcome.qualified == ("x", "y")
        assert outcome.screened_out == ("z",)

    def test_never_empty(self):
        outcome = screen({"only": 1e-9})
        assert outcome.qualified == ("only",)


def tiny_hierarchy():
    return DecisionHierarchy(
        goal="pick one",
        criteria=("K1", "K2"),
        sub_criteria={"K1": ("S1",), "K2": ("S2",)},
        alternatives=("A", "B"),
        decision_makers=("dm1", "dm2"),
    )


def tiny_matrices():
    crit = lambda: build_matrix(
        ("K1", "K2"),
        [("K1", "K2", "Moderately Important", False)],
        context=CRITERIA_CONTEXT,
    )
    single = lambda label, ctx: build_matrix((label,), [], context=ctx)
    alts = lambda ctx, inverted: build_matrix(
        ("A", "B"),
        [("A", "B", "Equally to Moderately Important", inverted)],
        context=ctx,
    )
    per_dm = {}
    for dm, flip in (("dm1", False), ("dm2", True)):
        per_dm[dm] = {
            CRITERIA_CONTEXT: crit(),
            subcriteria_context("K1"): single("S1", subcriteria_context("K1")),
            subcriteria_context("K2"): single("S2", subcriteria_context("K2")),
            alternatives_context("S1"): alts(alternatives_context("S1"), flip),
            alternatives_context("S2"): alts(alternatives_context("S2"), not flip),
        }
    return per_dm


class TestSynthesize:
    def test_local_weight_families_sum_to_one(self):
        result = synthesize(tiny_hierarchy(), tiny_matrices())
        for dm in ("dm1", "dm2"):
            assert sum(result.criteria_weights[dm].values) == pytest.approx(
                1.0, abs=1e-9
            )
            for wv in result.sub_criteria_weights[dm].values():
                assert sum(wv.values) == pytest.approx(1.0, abs=1e-9)
            assert sum(result.global_sub_weights[dm].values) == pytest.approx(
                1.0, abs=1e-9
            )

    def test_plumbing_matches_manual_recombination(self):
        hierarchy = tiny_hierarchy()
        matrices = tiny_matrices()
        result = synthesize(hierarchy, matrices)
        for dm in hierarchy.decision_makers:
            crit = local_weights(matrices[dm][CRITERIA_CONTEXT])
            expected = {}
            for alt in hierarchy.alternatives:
                total = 0.0
                for criterion, sub in (("K1", "S1"), ("K2", "S2")):
                    alt_local = local_weights(
                        matrices[dm][alternatives_context(sub)]
                    )
                    total += crit[criterion] * 1.0 * alt_local[alt]
                expected[alt] = total / 2
            assert result.alternative_weights[dm] == pytest.approx(expected)

    def test_final_is_mean_of_experts(self):
        result = synthesize(tiny_hierarchy(), tiny_matrices())
        for alt in ("A", "B"):
            mean = (
                result.alternative_weights["dm1"][alt]
                + result.alternative_weights["dm2"][alt]
            ) / 2
            assert result.final[alt] == pytest.approx(mean, abs=1e-15)

    def test_deterministic_bit_for_bit(self):
        a = synthesize(tiny_hierarchy(), tiny_matrices())
        b = synthesize(tiny_hierarchy(), tiny_matrices())
        assert a.final == b.final
        assert a.sigma == b.sigma
        assert a.ranking == b.ranking

    def test_missing_judgments_are_enumerated(self):
        matrices = tiny_matrices()
        del matrices["dm2"][alternatives_context("S2")]
        with pytest.raises(IncompleteJudgments) as exc:
            synthesize(tiny_hierarchy(), matrices)
        assert exc.value.missing == [("dm2", alternatives_context("S2"))]

    def test_table_rows_follow_ranking(self):
        result = synthesize(tiny_hierarchy(), tiny_matrices())
        rows = result.table_rows()
        assert [r["alternative"] for r in rows] == [
            r.alternative for r in result.ranking
        ]
        assert all(set(r["per_dm"]) == {"dm1", "dm2"} for r in rows)
        assert all(r["qualified"] == (r["alternative"] in result.qualified) for r in rows)

    def test_as_dict_serializes_cleanly(self):
        import json

        doc = synthesize(tiny_hierarchy(), tiny_matrices()).as_dict()
        json.dumps(doc)
        assert set(doc["final_weights"]) == {"A", "B"}
        assert doc["qualified"]


class TestAggregatedPath:
    def test_opposite_experts_cancel_to_uniform(self):
        direct = build_matrix(
            ("A", "B"), [("A", "B", "Strongly Important", False)]
        )
        inverse = build_matrix(
            ("A", "B"), [("A", "B", "Strongly Important", True)]
        )
        wv = aggregated_local_weights([direct, inverse])
        assert wv.values == pytest.approx((0.5, 0.5), abs=1e-12)
