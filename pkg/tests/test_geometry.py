import pytest
from hypothesis import given, strategies as st

from chessprobe.chesscore import (
    Color,
    PieceType,
    any_piecetype_reach,
    king_distance,
    legal_moves,
    parse_square,
    piecetype_geometry_reach,
    squares_between,
)

from helpers import random_positions

squares = st.integers(min_value=0, max_value=63)


def sq(name):
    return parse_square(name)


class TestPieceTypeGeometry:
    def test_queen_cannot_make_knight_hop(self):
        assert not piecetype_geometry_reach(PieceType.QUEEN, Color.WHITE, sq("d1"), sq("c3"))

    def test_bishop_long_diagonal_ignores_blockers(self):
        # geometry is board-agnostic: e4-b7 is a clean diagonal shape
        assert piecetype_geometry_reach(PieceType.BISHOP, Color.WHITE, sq("e4"), sq("b7"))

    def test_pawn_double_push_from_home_rank(self):
        assert piecetype_geometry_reach(PieceType.PAWN, Color.WHITE, sq("e2"), sq("e4"))
        assert not piecetype_geometry_reach(PieceType.PAWN, Color.WHITE, sq("e3"), sq("e5"))
        assert piecetype_geometry_reach(PieceType.PAWN, Color.BLACK, sq("e7"), sq("e5"))
        assert not piecetype_geometry_reach(PieceType.PAWN, Color.BLACK, sq("e2"), sq("e4"))

    def test_pawn_capture_offsets_are_color_directed(self):
        assert piecetype_geometry_reach(PieceType.PAWN, Color.WHITE, sq("e4"), sq("d5"))
        assert not piecetype_geometry_reach(PieceType.PAWN, Color.WHITE, sq("e4"), sq("d3"))
        assert piecetype_geometry_reach(PieceType.PAWN, Color.BLACK, sq("e4"), sq("d3"))

    def test_castling_hops_only_from_home_square(self):
        assert piecetype_geometry_reach(PieceType.KING, Color.WHITE, sq("e1"), sq("g1"))
        assert piecetype_geometry_reach(PieceType.KING, Color.WHITE, sq("e1"), sq("c1"))
        assert piecetype_geometry_reach(PieceType.KING, Color.BLACK, sq("e8"), sq("g8"))
        assert not piecetype_geometry_reach(PieceType.KING, Color.BLACK, sq("e1"), sq("g1"))
        assert not piecetype_geometry_reach(PieceType.KING, Color.WHITE, sq("e4"), sq("g4"))

    def test_from_equals_to_rejected(self):
        with pytest.raises(ValueError):
            piecetype_geometry_reach(PieceType.KING, Color.WHITE, sq("e1"), sq("e1"))

    def test_geometry_is_superset_of_legality(self):
        for board in random_positions(seed=31, count=400):
            for move in legal_moves(board):
                piece = board.piece_at(move.from_sq)
                assert piecetype_geometry_reach(
                    piece.piece_type, piece.color, move.from_sq, move.to_sq
                ), (board.ascii(), move)


class TestAnyPieceTypeReach:
    def test_one_three_offset_matches_nothing(self):
        assert not any_piecetype_reach(sq("a1"), sq("b4"))

    def test_knight_offset_matches(self):
        assert any_piecetype_reach(sq("a1"), sq("b3"))

    def test_long_diagonal_matches(self):
        assert any_piecetype_reach(sq("a1"), sq("h8"))

    @given(squares, squares)
    def test_agreement_with_per_type_enumeration(self, frm, to):
        if frm == to:
            return
        expected = any(
            piecetype_geometry_reach(t, c, frm, to)
            for t in PieceType for c in (Color.WHITE, Color.BLACK)
        )
        assert any_piecetype_reach(frm, to) == expected


class TestKingDistance:
    @pytest.mark.parametrize("a,b,want", [("e4", "b7", 3), ("e4", "e4", 0), ("a1", "h8", 7)])
    def test_examples(self, a, b, want):
        assert king_distance(sq(a), sq(b)) == want

    @given(squares, squares)
    def test_symmetry_and_identity(self, a, b):
        assert king_distance(a, b) == king_distance(b, a)
        assert (king_distance(a, b) == 0) == (a == b)

    @given(squares, squares, squares)
    def test_triangle_inequality(self, a, b, c):
        assert king_distance(a, c) <= king_distance(a, b) + king_distance(b, c)


class TestSquaresBetween:
    def test_aligned_pairs(self):
        assert squares_between(sq("a1"), sq("a4")) == (sq("a2"), sq("a3"))
        assert squares_between(sq("e4"), sq("b7")) == (sq("d5"), sq("c6"))
        assert squares_between(sq("a1"), sq("b2")) == ()

    def test_unaligned_pairs_are_empty(self):
        assert squares_between(sq("a1"), sq("b4")) == ()
        assert squares_between(sq("e4"), sq("f6")) == ()
