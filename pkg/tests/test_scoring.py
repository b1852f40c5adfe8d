import pytest

from chessprobe.datagen import GameRecord, ProbeKind, build_probes, game_id_for
from chessprobe.evalkit import (
    ErrorCategory,
    Prediction,
    PseudoLegalSubcat,
    aggregate,
    parse_report_metrics,
    ranked_from_scores,
    render_report,
    score_probe,
)
from chessprobe.notation import uci_parse, vocabulary


TASKS_GAME = GameRecord(
    game_id_for("e2e4 e7e5 g1f3 b8c6 d2d4 h7h6 f1b5 a7a6"),
    tuple(uci_parse(u) for u in "e2e4 e7e5 g1f3 b8c6 d2d4 h7h6 f1b5 a7a6".split()),
    "t",
)


@pytest.fixture(scope="module")
def tasks_probes():
    probes = build_probes([TASKS_GAME], [], n=1, seed=0, prefix_min=6, prefix_max=6)
    return {p.kind: p for p in probes}


def ranked(probe, *front):
    rest = [t for t in vocabulary() if t not in front]
    return Prediction(probe.probe_id, tuple(front) + tuple(rest))


class TestScoreProbe:
    def test_exact_hit(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "b5"))
        assert s.exm_hit and s.lgm_hit
        assert s.category == ErrorCategory.LEGAL
        assert s.prompt_piece == "B"

    def test_r_precision_one_when_top_r_equals_gold(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "e2", "d3", "c4", "b5", "a6"))
        assert s.r_precision == 1.0
        assert not s.exm_hit and s.lgm_hit  # top-1 e2 is legal but not the move played

    def test_partial_r_precision(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "e2", "d3", "h8", "g8", "f8"))
        assert s.r_precision == pytest.approx(2 / 5)

    def test_promoting_a_gold_token_never_lowers_r_precision(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        base = ["e2", "d3", "h8", "g8", "f8", "c4"]
        before = score_probe(probe, ranked(probe, *base)).r_precision
        promoted = ["e2", "d3", "c4", "h8", "g8", "f8"]
        after = score_probe(probe, ranked(probe, *promoted)).r_precision
        assert after >= before

    def test_syntax_miss(self, tasks_probes):
        # derived with the oracle: g1 is not on a bishop line from f1
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "g1"))
        assert not s.lgm_hit and s.category == ErrorCategory.SYNTAX

    def test_path_obstruction_miss(self, tasks_probes):
        # derived with the oracle: f1-h3 is a diagonal but g2 blocks it
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "h3"))
        assert s.category == ErrorCategory.PATH_OBSTRUCTION
        assert s.king_dist_top1 == 2

    def test_null_prediction_counts_unreachable(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "f1"))
        assert s.category == ErrorCategory.UNREACHABLE

    def test_non_square_top1_flagged_outside_taxonomy(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, ranked(probe, "EOS"))
        assert s.non_square_top1 and not s.lgm_hit and s.category is None

    def test_start_actual_hits(self, tasks_probes):
        probe = tasks_probes[ProbeKind.START_ACTUAL]
        s = score_probe(probe, ranked(probe, "f1", "c1"))
        assert s.exm_hit and s.lgm_hit and s.r_precision == 1.0
        s2 = score_probe(probe, ranked(probe, "c1", "f1"))
        assert not s2.exm_hit and s2.lgm_hit and s2.r_precision == 1.0

    def test_start_misses_are_not_categorized(self, tasks_probes):
        probe = tasks_probes[ProbeKind.START_ACTUAL]
        s = score_probe(probe, ranked(probe, "h8"))
        assert not s.lgm_hit and s.category is None and not s.non_square_top1

    def test_exm_hit_implies_lgm_hit(self, tasks_probes):
        for probe in tasks_probes.values():
            if not probe.kind.is_actual:
                continue
            s = score_probe(probe, ranked(probe, probe.exm_gold))
            assert s.exm_hit and s.lgm_hit

    def test_missing_ranks_flagged(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        s = score_probe(probe, Prediction(probe.probe_id, ("b5", "e2")))
        assert s.ranks_truncated
        assert s.r_precision == pytest.approx(2 / 5)

    def test_id_mismatch_rejected(self, tasks_probes):
        probe = tasks_probes[ProbeKind.END_ACTUAL]
        with pytest.raises(ValueError):
            score_probe(probe, Prediction("someone-else", ("b5",)))


class TestPrediction:
    def test_duplicate_tokens_rejected(self):
        with pytest.raises(ValueError):
            Prediction("p", ("b5", "b5"))

    def test_out_of_vocabulary_rejected(self):
        with pytest.raises(KeyError):
            Prediction("p", ("e9",))

    def test_ranked_from_scores_breaks_ties_in_vocab_order(self):
        scores = [0.0] * 77
        scores[vocabulary().index("b5")] = 1.0
        order = ranked_from_scores(scores)
        assert order[0] == "b5"
        assert list(order[1:]) == [t for t in vocabulary() if t != "b5"]

    def test_ranked_from_scores_requires_77(self):
        with pytest.raises(ValueError):
            ranked_from_scores([1.0, 2.0])


class TestAggregate:
    def test_hand_tallied_fixture(self, tasks_probes):
        end = tasks_probes[ProbeKind.END_ACTUAL]
        start = tasks_probes[ProbeKind.START_ACTUAL]
        results = [
            score_probe(end, ranked(end, "b5")),          # exm+lgm hit
            score_probe(end, ranked(end, "e2")),          # lgm hit only
            score_probe(end, ranked(end, "g1")),          # syntax
            score_probe(end, ranked(end, "h3")),          # path obstruction
            score_probe(end, ranked(end, "EOS")),         # non-square
            score_probe(start, ranked(start, "f1")),      # exm hit
            score_probe(start, ranked(start, "c1")),      # lgm hit only
            score_probe(start, ranked(start, "h8")),      # miss
        ]
        report = aggregate(results)
        ea = report.kinds["end-actual"]
        assert ea.n == 5
        assert ea.exm_acc == pytest.approx(1 / 5)
        assert ea.lgm_acc == pytest.approx(2 / 5)
        sa = report.kinds["start-actual"]
        assert sa.n == 3
        assert sa.exm_acc == pytest.approx(1 / 3)
        assert sa.lgm_acc == pytest.approx(2 / 3)
        errors = report.error_counts["end-actual"]
        assert errors["syntax"] == 1
        assert errors["path-obstruction"] == 1
        assert errors["unreachable"] == 0
        assert errors["pseudo-legal"] == 0
        assert report.non_square_counts["end-actual"] == 1
        assert report.per_piece["end-actual"]["B"].n == 5

    def test_quadrant_totals_exclude_other_errors(self, tasks_probes):
        end = tasks_probes[ProbeKind.END_ACTUAL]
        results = [
            score_probe(end, ranked(end, "b5")),   # legal, counted in total
            score_probe(end, ranked(end, "g1")),   # syntax, excluded from total
        ]
        report = aggregate(results)
        quadrant = PseudoLegalSubcat.from_flags(False, False).value
        assert report.pseudo_subcats["end-actual"][quadrant] == (0, 1)
        assert report.path_obstruction["end-actual"]["B"] == (0, 1)

    def test_empty_results_rejected(self):
        with pytest.raises(ValueError):
            aggregate([])

    def test_render_and_parse_metrics(self, tasks_probes):
        end = tasks_probes[ProbeKind.END_ACTUAL]
        report = aggregate([score_probe(end, ranked(end, "b5"))],
                           perplexity=12.5, perplexity_renormalized=True)
        text = render_report(report)
        assert "== Probing accuracies ==" in text
        metrics = parse_report_metrics(text)
        assert metrics["end-actual.exm_acc"] == "1.000000"
        assert metrics["perplexity"] == "12.500000"
        assert metrics["perplexity.renormalized"] == "true"

    def test_king_distance_split_by_verdict(self, tasks_probes):
        end = tasks_probes[ProbeKind.END_ACTUAL]
        results = [
            score_probe(end, ranked(end, "b5")),  # legal at distance 4
            score_probe(end, ranked(end, "h3")),  # blocked at distance 2
        ]
        report = aggregate(results)
        legal_mean, blocked_mean = report.king_distance_means["end-actual"]["ALL"]
        assert legal_mean == pytest.approx(4.0)
        assert blocked_mean == pytest.approx(2.0)
