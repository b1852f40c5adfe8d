"""Core board/move value types and the position state machine.

Squares are ints 0..63 (``file + 8*rank``, a1=0, h8=63). Pieces are packed
into one int per square (``color*6 + piece_type``, -1 for empty) so that
positions can be copied and compared cheaply; the public surface speaks in
``Piece`` tuples and square ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

Square = int

FILE_NAMES = "abcdefgh"
RANK_NAMES = "12345678"
SQUARES = tuple(range(64))
SQUARE_NAMES = tuple(FILE_NAMES[s & 7] + RANK_NAMES[s >> 3] for s in SQUARES)


class Color(enum.IntEnum):
    WHITE = 0
    BLACK = 1

    @property
    def other(self) -> "Color":
        return Color(self ^ 1)


class PieceType(enum.IntEnum):
    PAWN = 0
    KNIGHT = 1
    BISHOP = 2
    ROOK = 3
    QUEEN = 4
    KING = 5

    @property
    def letter(self) -> str:
        return PIECE_LETTERS[self]

    @classmethod
    def from_letter(cls, letter: str) -> "PieceType":
        try:
            return cls(PIECE_LETTERS.index(letter.upper()))
        except ValueError:
            raise ValueError(f"not a piece letter: {letter!r}") from None


PIECE_LETTERS = "PNBRQK"
PROMOTION_TYPES = (PieceType.QUEEN, PieceType.ROOK, PieceType.BISHOP, PieceType.KNIGHT)


class Piece(NamedTuple):
    color: Color
    piece_type: PieceType


class Castling(enum.IntFlag):
    NONE = 0
    WHITE_KINGSIDE = 1
    WHITE_QUEENSIDE = 2
    BLACK_KINGSIDE = 4
    BLACK_QUEENSIDE = 8
    ALL = 15


def square(file: int, rank: int) -> Square:
    if not (0 <= file <= 7 and 0 <= rank <= 7):
        raise ValueError(f"file/rank out of range: ({file}, {rank})")
    return file + 8 * rank


def square_file(sq: Square) -> int:
    return sq & 7


def square_rank(sq: Square) -> int:
    return sq >> 3


def square_name(sq: Square) -> str:
    return SQUARE_NAMES[sq]


def parse_square(name: str) -> Square:
    if len(name) != 2 or name[0] not in FILE_NAMES or name[1] not in RANK_NAMES:
        raise ValueError(f"not a square name: {name!r}")
    return FILE_NAMES.index(name[0]) + 8 * RANK_NAMES.index(name[1])


@dataclass(frozen=True, slots=True)
class Move:
    """A move in from/to(/promotion) form, the unit of UCI notation."""

    from_sq: Square
    to_sq: Square
    promotion: Optional[PieceType] = None

    def __post_init__(self) -> None:
        if self.from_sq == self.to_sq:
            raise ValueError("move with from == to")
        if self.promotion is not None and self.promotion not in PROMOTION_TYPES:
            raise ValueError(f"invalid promotion piece: {self.promotion}")

    def __repr__(self) -> str:
        promo = self.promotion.letter.lower() if self.promotion else ""
        return f"Move({square_name(self.from_sq)}{square_name(self.to_sq)}{promo})"


class IllegalMove(Exception):
    """Raised when a move is not legal in the given position."""


class EmptyOrOpponentSquare(Exception):
    """Raised when an operation needs a side-to-move piece on the square."""


EMPTY = -1

_WK, _BK = PieceType.KING, 6 + PieceType.KING

# rook home squares and the castling right a move touching them removes
_ROOK_RIGHTS = {0: Castling.WHITE_QUEENSIDE, 7: Castling.WHITE_KINGSIDE,
                56: Castling.BLACK_QUEENSIDE, 63: Castling.BLACK_KINGSIDE}

_CASTLE_ROOK = {6: (7, 5), 2: (0, 3), 62: (63, 61), 58: (56, 59)}  # king to -> (rook from, rook to)


def _code(color: Color, ptype: PieceType) -> int:
    return color * 6 + ptype


class Board:
    """An immutable chess position: occupancy, side to move, castling, en passant.

    Construct positions with :func:`initial_board` and :func:`apply_move`, or
    directly from a piece placement for tests and analysis. Direct
    construction validates the position invariants (one king per side, no
    pawns on back ranks, consistent castling rights and en-passant target).
    """

    __slots__ = ("_squares", "side_to_move", "castling", "en_passant_target", "_kings")

    _squares: tuple
    side_to_move: Color
    castling: Castling
    en_passant_target: Optional[Square]

    def __init__(
        self,
        placement: dict[Square, Piece] | tuple,
        side_to_move: Color = Color.WHITE,
        castling: Castling = Castling.NONE,
        en_passant_target: Optional[Square] = None,
    ):
        if isinstance(placement, dict):
            sqs = [EMPTY] * 64
            for sq, piece in placement.items():
                sqs[sq] = _code(piece.color, piece.piece_type)
            codes = tuple(sqs)
        else:
            codes = tuple(placement)
        self._squares = codes
        self.side_to_move = Color(side_to_move)
        self.castling = Castling(castling)
        self.en_passant_target = en_passant_target
        self._kings = (self._find(_WK), self._find(_BK))
        self._validate()

    @classmethod
    def _make(cls, codes, side_to_move, castling, ep, kings) -> "Board":
        """Internal fast path for positions produced by legal moves."""
        b = object.__new__(cls)
        b._squares = codes
        b.side_to_move = side_to_move
        b.castling = castling
        b.en_passant_target = ep
        b._kings = kings
        return b

    def _find(self, code: int) -> Square:
        try:
            return self._squares.index(code)
        except ValueError:
            raise ValueError("position must have exactly one king per color") from None

    def _validate(self) -> None:
        sqs = self._squares
        for code in (_WK, _BK):
            if sqs.count(code) != 1:
                raise ValueError("position must have exactly one king per color")
        for sq in range(8):
            if sqs[sq] % 6 == PieceType.PAWN and sqs[sq] != EMPTY:
                raise ValueError("pawn on rank 1")
        for sq in range(56, 64):
            if sqs[sq] % 6 == PieceType.PAWN and sqs[sq] != EMPTY:
                raise ValueError("pawn on rank 8")
        rights = (
            (Castling.WHITE_KINGSIDE, 4, _WK, 7, _code(Color.WHITE, PieceType.ROOK)),
            (Castling.WHITE_QUEENSIDE, 4, _WK, 0, _code(Color.WHITE, PieceType.ROOK)),
            (Castling.BLACK_KINGSIDE, 60, _BK, 63, _code(Color.BLACK, PieceType.ROOK)),
            (Castling.BLACK_QUEENSIDE, 60, _BK, 56, _code(Color.BLACK, PieceType.ROOK)),
        )
        for flag, ksq, kcode, rsq, rcode in rights:
            if self.castling & flag and (sqs[ksq] != kcode or sqs[rsq] != rcode):
                raise ValueError(f"castling right {flag!r} without king/rook on home squares")
        ep = self.en_passant_target
        if ep is not None:
            # only valid immediately after a double push by the side not to
            # move: the bypassed pawn sits on the far side of the target
            rank = square_rank(ep)
            mover = self.side_to_move
            pawn_sq = ep - 8 if mover == Color.WHITE else ep + 8
            expect_rank = 5 if mover == Color.WHITE else 2
            pawn_code = _code(mover.other, PieceType.PAWN)
            if rank != expect_rank or sqs[pawn_sq] != pawn_code or sqs[ep] != EMPTY:
                raise ValueError("inconsistent en-passant target")

    # -- queries ------------------------------------------------------------

    def piece_at(self, sq: Square) -> Optional[Piece]:
        code = self._squares[sq]
        if code == EMPTY:
            return None
        return Piece(Color(code // 6), PieceType(code % 6))

    def king_square(self, color: Color) -> Square:
        return self._kings[color]

    def occupied_squares(self) -> Iterator[Square]:
        return (sq for sq in SQUARES if self._squares[sq] != EMPTY)

    def pieces(self, color: Color, ptype: PieceType) -> list[Square]:
        code = _code(color, ptype)
        return [sq for sq in SQUARES if self._squares[sq] == code]

    def occupancy(self) -> dict[Square, Piece]:
        return {sq: self.piece_at(sq) for sq in self.occupied_squares()}

    def has_castling_right(self, color: Color, kingside: bool) -> bool:
        flag = (Castling.WHITE_KINGSIDE if kingside else Castling.WHITE_QUEENSIDE) \
            if color == Color.WHITE else \
            (Castling.BLACK_KINGSIDE if kingside else Castling.BLACK_QUEENSIDE)
        return bool(self.castling & flag)

    def ascii(self) -> str:
        """Debug board diagram, white at the bottom."""
        rows = []
        for rank in range(7, -1, -1):
            cells = []
            for file in range(8):
                piece = self.piece_at(square(file, rank))
                if piece is None:
                    cells.append(".")
                else:
                    letter = piece.piece_type.letter
                    cells.append(letter if piece.color == Color.WHITE else letter.lower())
            rows.append(f"{rank + 1} " + " ".join(cells))
        rows.append("  a b c d e f g h")
        return "\n".join(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return (
            self._squares == other._squares
            and self.side_to_move == other.side_to_move
            and self.castling == other.castling
            and self.en_passant_target == other.en_passant_target
        )

    def __hash__(self) -> int:
        return hash((self._squares, self.side_to_move, self.castling, self.en_passant_target))

    def __repr__(self) -> str:
        return f"<Board {self.side_to_move.name} to move>"


_INITIAL_CODES: tuple = None  # filled below


def initial_board() -> Board:
    """The standard starting position, White to move, full castling rights."""
    return Board._make(_INITIAL_CODES, Color.WHITE, Castling.ALL, None, (4, 60))


def _build_initial() -> tuple:
    sqs = [EMPTY] * 64
    back = (PieceType.ROOK, PieceType.KNIGHT, PieceType.BISHOP, PieceType.QUEEN,
            PieceType.KING, PieceType.BISHOP, PieceType.KNIGHT, PieceType.ROOK)
    for file in range(8):
        sqs[square(file, 0)] = _code(Color.WHITE, back[file])
        sqs[square(file, 1)] = _code(Color.WHITE, PieceType.PAWN)
        sqs[square(file, 6)] = _code(Color.BLACK, PieceType.PAWN)
        sqs[square(file, 7)] = _code(Color.BLACK, back[file])
    return tuple(sqs)


_INITIAL_CODES = _build_initial()


def apply_move_unchecked(board: Board, move: Move) -> Board:
    """Apply a move assumed legal; callers must have validated it."""
    sqs = list(board._squares)
    us = board.side_to_move
    frm, to = move.from_sq, move.to_sq
    code = sqs[frm]
    ptype = code % 6
    sqs[frm] = EMPTY

    ep = None
    if ptype == PieceType.PAWN:
        if to == board.en_passant_target and sqs[to] == EMPTY:
            # the bypassed pawn sits behind the target square
            sqs[to - 8 if us == Color.WHITE else to + 8] = EMPTY
        if abs(to - frm) == 16:
            ep = (frm + to) // 2
        if move.promotion is not None:
            code = _code(us, move.promotion)
    elif ptype == PieceType.KING and abs(to - frm) == 2:
        rook_from, rook_to = _CASTLE_ROOK[to]
        sqs[rook_to] = sqs[rook_from]
        sqs[rook_from] = EMPTY
    sqs[to] = code

    castling = board.castling
    if ptype == PieceType.KING:
        castling &= ~(Castling.WHITE_KINGSIDE | Castling.WHITE_QUEENSIDE) \
            if us == Color.WHITE else \
            ~(Castling.BLACK_KINGSIDE | Castling.BLACK_QUEENSIDE)
    for sq in (frm, to):
        right = _ROOK_RIGHTS.get(sq)
        if right is not None:
            castling &= ~right

    kings = board._kings
    if ptype == PieceType.KING:
        kings = (to, kings[1]) if us == Color.WHITE else (kings[0], to)

    return Board._make(tuple(sqs), us.other, castling, ep, kings)
