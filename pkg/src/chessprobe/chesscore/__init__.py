"""FIDE-rules chess core: position state, legal move generation, geometry."""

from .board import (
    Board,
    Castling,
    Color,
    EmptyOrOpponentSquare,
    IllegalMove,
    Move,
    Piece,
    PieceType,
    PIECE_LETTERS,
    PROMOTION_TYPES,
    Square,
    SQUARE_NAMES,
    SQUARES,
    apply_move_unchecked,
    initial_board,
    parse_square,
    square,
    square_file,
    square_name,
    square_rank,
)
from .geometry import (
    any_piecetype_reach,
    king_distance,
    piecetype_geometry_reach,
    squares_between,
)
from .movegen import (
    apply_move,
    castling_candidates,
    is_in_check,
    is_legal,
    legal_destinations,
    legal_moves,
    legal_moves_from,
    movable_squares_of_type,
    perft,
)

__all__ = [
    "Board", "Castling", "Color", "EmptyOrOpponentSquare", "IllegalMove",
    "Move", "Piece", "PieceType", "PIECE_LETTERS", "PROMOTION_TYPES",
    "Square", "SQUARE_NAMES", "SQUARES",
    "apply_move", "apply_move_unchecked", "castling_candidates", "initial_board",
    "parse_square", "square", "square_file", "square_name", "square_rank",
    "any_piecetype_reach", "king_distance", "piecetype_geometry_reach",
    "squares_between",
    "is_in_check", "is_legal", "legal_destinations", "legal_moves",
    "legal_moves_from", "movable_squares_of_type", "perft",
]
