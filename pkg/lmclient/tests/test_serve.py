import math

import pytest

from lmclient import ClientConfig, VocabularyMismatch, load_vocabulary, serve_predictions
from lmclient.cli import main
from lmclient.probes import read_probe_rows
from lmclient.vocab import PIECE_TYPE_TOKENS

from conftest import PROBE_LINES, VOCAB_TOKENS


def read_rows(path):
    rows = {}
    for line in path.read_text().splitlines():
        probe_id, payload = line.split("\t")
        rows[probe_id] = [float(x) for x in payload.split(" ")]
    return rows


class TestVocabulary:
    def test_canonical_file_accepted(self, vocab_file):
        assert load_vocabulary(vocab_file) == VOCAB_TOKENS

    def test_tampered_file_aborts(self, vocab_file):
        vocab_file.write_text(vocab_file.read_text().replace("a1", "z9"))
        with pytest.raises(VocabularyMismatch):
            load_vocabulary(vocab_file)


class TestProbeRows:
    def test_fields_parsed(self, probe_file):
        rows = read_probe_rows(probe_file)
        assert len(rows) == len(PROBE_LINES)
        assert rows[0].prompt == "f1"
        assert rows[0].prefix_tokens[:2] == ("e2", "e4")

    def test_malformed_line_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("id\tonly-two-fields\n")
        with pytest.raises(ValueError):
            read_probe_rows(path)


class TestServeStub:
    def cfg(self, vocab_file, probe_file, tmp_path, **kwargs):
        return ClientConfig(
            vocab_path=str(vocab_file),
            probe_path=str(probe_file),
            out_path=str(tmp_path / "preds.txt"),
            **kwargs,
        )

    def test_row_count_matches_probe_count(self, vocab_file, probe_file, tmp_path):
        cfg = self.cfg(vocab_file, probe_file, tmp_path)
        assert serve_predictions(cfg) == len(PROBE_LINES)
        rows = read_rows(tmp_path / "preds.txt")
        assert len(rows) == len(PROBE_LINES)

    def test_rows_are_uniform_over_unmasked_and_normalized(self, vocab_file, probe_file, tmp_path):
        cfg = self.cfg(vocab_file, probe_file, tmp_path, mask_piece_types=True)
        serve_predictions(cfg)
        masked_idx = [i for i, t in enumerate(VOCAB_TOKENS) if t in PIECE_TYPE_TOKENS]
        for scores in read_rows(tmp_path / "preds.txt").values():
            assert len(scores) == 77
            assert all(math.isfinite(s) for s in scores)
            assert sum(scores) == pytest.approx(1.0, abs=1e-6)
            for i in masked_idx:
                assert scores[i] == 0.0
            live = [s for i, s in enumerate(scores) if i not in masked_idx]
            assert max(live) - min(live) < 1e-6  # uniform up to tie-break jitter
            assert len(set(live)) == len(live)   # but strictly ordered for argmax

    def test_unmasked_mode_spreads_over_all_77(self, vocab_file, probe_file, tmp_path):
        cfg = self.cfg(vocab_file, probe_file, tmp_path, mask_piece_types=False)
        serve_predictions(cfg)
        for scores in read_rows(tmp_path / "preds.txt").values():
            assert all(s > 0 for s in scores)
            assert sum(scores) == pytest.approx(1.0, abs=1e-6)

    def test_deterministic_per_seed(self, vocab_file, probe_file, tmp_path):
        a = self.cfg(vocab_file, probe_file, tmp_path, seed=5)
        serve_predictions(a)
        first = (tmp_path / "preds.txt").read_bytes()
        serve_predictions(a)
        assert (tmp_path / "preds.txt").read_bytes() == first
        b = self.cfg(vocab_file, probe_file, tmp_path, seed=6)
        serve_predictions(b)
        assert (tmp_path / "preds.txt").read_bytes() != first

    def test_argmax_varies_with_seed(self, vocab_file, probe_file, tmp_path):
        tops = set()
        for seed in range(12):
            cfg = self.cfg(vocab_file, probe_file, tmp_path, seed=seed)
            serve_predictions(cfg)
            scores = read_rows(tmp_path / "preds.txt")[PROBE_LINES[0].split("\t")[0]]
            tops.add(scores.index(max(scores)))
        assert len(tops) > 3


class TestCli:
    def test_end_to_end(self, vocab_file, probe_file, tmp_path, capsys):
        out = tmp_path / "preds.txt"
        assert main(["--vocab", str(vocab_file), "--probes", str(probe_file),
                     "--out", str(out), "--seed", "3"]) == 0
        assert "4 prediction rows" in capsys.readouterr().err
        assert len(out.read_text().splitlines()) == 4

    def test_vocabulary_mismatch_aborts(self, vocab_file, probe_file, tmp_path, capsys):
        vocab_file.write_text("just\nwrong\n")
        assert main(["--vocab", str(vocab_file), "--probes", str(probe_file),
                     "--out", str(tmp_path / "p.txt")]) == 2
        assert "sha256" in capsys.readouterr().err
