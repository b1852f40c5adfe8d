"""Classification of illegal ending-square predictions.

An illegal (from, to) prediction falls into exactly one category, tested in
a fixed precedence order:

  Unreachable      no piece type of either color could ever hop from->to
  Syntax           the piece type actually on `from` could never hop from->to
  PathObstruction  the hop exists but pieces are in the way: blocked sliding
                   path, own piece on the destination, blocked pawn push,
                   pawn capture with nothing to take, or an unavailable
                   castling (rights gone, rook missing, occupied or unsafe
                   path, or castling out of check)
  PseudoLegal      the move executes but leaves the mover's own king in check

Because PathObstruction absorbs every way a move can fail to execute, a
PseudoLegal verdict is always confirmable by force-executing the move and
observing the mover in check.
"""

from __future__ import annotations

import enum

from ..chesscore import (
    Board,
    Color,
    EmptyOrOpponentSquare,
    Move,
    PieceType,
    Square,
    any_piecetype_reach,
    apply_move_unchecked,
    castling_candidates,
    is_in_check,
    legal_moves_from,
    piecetype_geometry_reach,
    square_file,
    square_rank,
    squares_between,
)


class NotIllegal(Exception):
    """The prediction is in fact a legal move."""


class ErrorCategory(enum.Enum):
    LEGAL = "legal"
    UNREACHABLE = "unreachable"
    SYNTAX = "syntax"
    PATH_OBSTRUCTION = "path-obstruction"
    PSEUDO_LEGAL = "pseudo-legal"


class PseudoLegalSubcat(enum.Enum):
    CHECK_KING = "check+king"
    CHECK_OTHER = "check+other"
    NO_CHECK_KING = "nocheck+king"
    NO_CHECK_OTHER = "nocheck+other"

    @classmethod
    def from_flags(cls, check_before: bool, king_moved: bool) -> "PseudoLegalSubcat":
        if check_before:
            return cls.CHECK_KING if king_moved else cls.CHECK_OTHER
        return cls.NO_CHECK_KING if king_moved else cls.NO_CHECK_OTHER


def force_execute(board: Board, frm: Square, to: Square) -> Board:
    """Execute the move mechanics regardless of king safety.

    Promoting pawn moves are executed as queen promotions; the choice cannot
    affect whether the mover's own king ends up in check.
    """
    piece = board.piece_at(frm)
    promo = None
    if piece is not None and piece.piece_type == PieceType.PAWN and square_rank(to) in (0, 7):
        promo = PieceType.QUEEN
    return apply_move_unchecked(board, Move(frm, to, promo))


def classify_illegal_end(board: Board, frm: Square, to: Square) -> ErrorCategory:
    """Categorize an illegal ending-square prediction for the piece on `frm`.

    Raises NotIllegal if (frm, to) is a legal move's projection, and
    EmptyOrOpponentSquare if `frm` does not hold a side-to-move piece.
    """
    piece = board.piece_at(frm)
    if piece is None or piece.color != board.side_to_move:
        raise EmptyOrOpponentSquare(f"no side-to-move piece on square {frm}")
    if frm == to:
        raise ValueError("prediction with to == from")
    if any(m.to_sq == to for m in legal_moves_from(board, frm)):
        raise NotIllegal(f"{frm}->{to} is legal")

    if not any_piecetype_reach(frm, to):
        return ErrorCategory.UNREACHABLE
    ptype, color = piece.piece_type, piece.color
    if not piecetype_geometry_reach(ptype, color, frm, to):
        return ErrorCategory.SYNTAX

    if _obstructed(board, ptype, color, frm, to):
        return ErrorCategory.PATH_OBSTRUCTION

    after = force_execute(board, frm, to)
    if is_in_check(after, color):
        return ErrorCategory.PSEUDO_LEGAL
    raise AssertionError(
        f"{frm}->{to} is executable and leaves no self-check, yet was not legal")


def _obstructed(board: Board, ptype: PieceType, color: Color, frm: Square, to: Square) -> bool:
    """Everything that stops the move from executing at all."""
    dest = board.piece_at(to)
    if dest is not None and dest.color == color:
        return True
    if ptype in (PieceType.BISHOP, PieceType.ROOK, PieceType.QUEEN):
        return any(board.piece_at(s) is not None for s in squares_between(frm, to))
    if ptype == PieceType.PAWN:
        if square_file(frm) == square_file(to):
            # a push: any occupant on the way or on the target blocks it
            if dest is not None:
                return True
            return any(board.piece_at(s) is not None for s in squares_between(frm, to))
        # a capture: needs an enemy occupant or the en-passant target
        return dest is None and to != board.en_passant_target
    if ptype == PieceType.KING and abs(square_file(frm) - square_file(to)) == 2:
        # castling shape: executable only if availability rules hold now
        return not any(m.to_sq == to for m in castling_candidates(board))
    return False


def subclassify_pseudo_legal(board: Board, frm: Square, to: Square) -> PseudoLegalSubcat:
    """Quadrant of a pseudo-legal error: was the mover in check before, and
    is the king the piece being moved."""
    piece = board.piece_at(frm)
    if piece is None or piece.color != board.side_to_move:
        raise EmptyOrOpponentSquare(f"no side-to-move piece on square {frm}")
    return PseudoLegalSubcat.from_flags(
        check_before=is_in_check(board, board.side_to_move),
        king_moved=piece.piece_type == PieceType.KING,
    )
