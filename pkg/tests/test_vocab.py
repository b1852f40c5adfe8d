from chessprobe.notation import (
    BOS,
    EOS,
    PAD,
    PIECE_TYPE_TOKENS,
    PROMOTION_TOKENS,
    SPECIAL_TOKENS,
    SQUARE_TOKENS,
    is_piece_type_token,
    is_promotion_token,
    is_square_token,
    read_vocabulary_file,
    token_index,
    vocabulary,
    write_vocabulary_file,
)

import pytest


class TestVocabulary:
    def test_77_tokens_with_class_counts(self):
        vocab = vocabulary()
        assert len(vocab) == 77
        assert len(SQUARE_TOKENS) == 64
        assert len(PIECE_TYPE_TOKENS) == 6
        assert len(PROMOTION_TOKENS) == 4
        assert len(SPECIAL_TOKENS) == 3

    def test_classes_are_disjoint(self):
        classes = [set(SQUARE_TOKENS), set(PIECE_TYPE_TOKENS),
                   set(PROMOTION_TOKENS), set(SPECIAL_TOKENS)]
        union = set().union(*classes)
        assert len(union) == sum(len(c) for c in classes) == 77

    def test_promoted_q_and_piece_Q_are_distinct(self):
        vocab = vocabulary()
        assert "q" in vocab and "Q" in vocab
        assert token_index("q") != token_index("Q")

    def test_specials_present(self):
        vocab = vocabulary()
        for token in (BOS, EOS, PAD):
            assert token in vocab

    def test_index_matches_position(self):
        for i, token in enumerate(vocabulary()):
            assert token_index(token) == i
        with pytest.raises(KeyError):
            token_index("e9")

    def test_frozen_order(self):
        vocab = vocabulary()
        assert vocab[0] == "a1"
        assert vocab[7] == "a8"  # file-major: a1..a8 then b1..
        assert vocab[8] == "b1"
        assert vocab[63] == "h8"
        assert vocab[64:70] == ["P", "N", "B", "R", "Q", "K"]
        assert vocab[70:74] == ["q", "r", "b", "n"]
        assert vocab[74:] == ["BOS", "EOS", "PAD"]

    def test_predicates(self):
        assert is_square_token("e4") and not is_square_token("P")
        assert is_piece_type_token("P") and not is_piece_type_token("q")
        assert is_promotion_token("q") and not is_promotion_token("Q")


class TestVocabularyFile:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "vocab.txt"
        write_vocabulary_file(path)
        assert read_vocabulary_file(path) == vocabulary()
        raw = path.read_bytes()
        assert raw.endswith(b"\n") and b"\r" not in raw
        assert len(raw.decode("utf-8").splitlines()) == 77

    def test_tampered_file_rejected(self, tmp_path):
        path = tmp_path / "vocab.txt"
        write_vocabulary_file(path)
        path.write_text(path.read_text().replace("a1", "z9"), encoding="utf-8")
        with pytest.raises(ValueError):
            read_vocabulary_file(path)
