"""Board-agnostic movement geometry.

These predicates answer "could this piece type ever make this from/to hop on
an empty board", under the most permissive reading: pawns always get the
double push from their home rank and both capture offsets, kings get the two
castling hops from their home square. The error taxonomy uses them to
separate piece-identity mistakes from board-state mistakes, so they must be
a strict superset of legality for every piece type.
"""

from __future__ import annotations

from .board import Color, PieceType, Square, square_file, square_rank

_WHITE_KING_HOME = 4
_BLACK_KING_HOME = 60


def king_distance(frm: Square, to: Square) -> int:
    """Chebyshev distance: the number of king moves between two squares."""
    return max(abs(square_file(frm) - square_file(to)), abs(square_rank(frm) - square_rank(to)))


def piecetype_geometry_reach(ptype: PieceType, color: Color, frm: Square, to: Square) -> bool:
    """True iff a `(color, ptype)` piece could hop frm->to on an empty board."""
    if frm == to:
        raise ValueError("geometry is undefined for from == to")
    df = square_file(to) - square_file(frm)
    dr = square_rank(to) - square_rank(frm)
    if ptype == PieceType.KNIGHT:
        return (abs(df), abs(dr)) in ((1, 2), (2, 1))
    if ptype == PieceType.BISHOP:
        return abs(df) == abs(dr)
    if ptype == PieceType.ROOK:
        return df == 0 or dr == 0
    if ptype == PieceType.QUEEN:
        return df == 0 or dr == 0 or abs(df) == abs(dr)
    if ptype == PieceType.KING:
        if max(abs(df), abs(dr)) == 1:
            return True
        home = _WHITE_KING_HOME if color == Color.WHITE else _BLACK_KING_HOME
        return frm == home and dr == 0 and abs(df) == 2
    # pawn: push, double push from home rank, capture offsets
    fwd = 1 if color == Color.WHITE else -1
    home_rank = 1 if color == Color.WHITE else 6
    if df == 0:
        return dr == fwd or (dr == 2 * fwd and square_rank(frm) == home_rank)
    return abs(df) == 1 and dr == fwd


def any_piecetype_reach(frm: Square, to: Square) -> bool:
    """True iff some (piece type, color) pair reaches frm->to geometrically."""
    return any(
        piecetype_geometry_reach(ptype, color, frm, to)
        for ptype in PieceType
        for color in (Color.WHITE, Color.BLACK)
    )


def _build_between():
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for frm in range(64):
        ff, fr = frm & 7, frm >> 3
        for df, dr in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)):
            path = []
            tf, tr = ff + df, fr + dr
            while 0 <= tf <= 7 and 0 <= tr <= 7:
                to = tf + 8 * tr
                table[(frm, to)] = tuple(path)
                path.append(to)
                tf += df
                tr += dr
    return table


_BETWEEN = _build_between()


def squares_between(frm: Square, to: Square) -> tuple[Square, ...]:
    """Squares strictly between two aligned squares; empty for unaligned pairs."""
    return _BETWEEN.get((frm, to), ())
