"""Legal move generation, check detection, and perft.

Pseudo-legal candidates come from precomputed per-square tables; legality is
settled by playing each candidate on a scratch array and testing whether the
mover's king is attacked. Castling additionally checks rights, emptiness,
and the no-check/no-transit-through-attack rules up front.
"""

from __future__ import annotations

from .board import (
    EMPTY,
    Board,
    Castling,
    Color,
    EmptyOrOpponentSquare,
    IllegalMove,
    Move,
    PieceType,
    PROMOTION_TYPES,
    Square,
    apply_move_unchecked,
)

_PAWN, _KNIGHT, _BISHOP, _ROOK, _QUEEN, _KING = range(6)


def _build_tables():
    knight, king = [], []
    rook_rays, bishop_rays = [], []
    pawn_attackers = ([], [])  # [color][sq] -> squares a pawn of color attacks sq from
    for sq in range(64):
        f, r = sq & 7, sq >> 3
        knight.append(tuple(
            tf + 8 * tr
            for df, dr in ((1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2))
            for tf, tr in ((f + df, r + dr),)
            if 0 <= tf <= 7 and 0 <= tr <= 7
        ))
        king.append(tuple(
            tf + 8 * tr
            for df in (-1, 0, 1) for dr in (-1, 0, 1) if (df, dr) != (0, 0)
            for tf, tr in ((f + df, r + dr),)
            if 0 <= tf <= 7 and 0 <= tr <= 7
        ))

        def ray(df, dr):
            out = []
            tf, tr = f + df, r + dr
            while 0 <= tf <= 7 and 0 <= tr <= 7:
                out.append(tf + 8 * tr)
                tf += df
                tr += dr
            return tuple(out)

        rook_rays.append(tuple(ray(*d) for d in ((1, 0), (-1, 0), (0, 1), (0, -1))))
        bishop_rays.append(tuple(ray(*d) for d in ((1, 1), (1, -1), (-1, 1), (-1, -1))))
        # a white pawn attacks sq from one rank below, a black pawn from one above
        white_from = tuple(s for s in (sq - 9, sq - 7) if 0 <= s < 64 and abs((s & 7) - f) == 1)
        black_from = tuple(s for s in (sq + 7, sq + 9) if 0 <= s < 64 and abs((s & 7) - f) == 1)
        pawn_attackers[0].append(white_from)
        pawn_attackers[1].append(black_from)
    return tuple(knight), tuple(king), tuple(rook_rays), tuple(bishop_rays), \
        (tuple(pawn_attackers[0]), tuple(pawn_attackers[1]))


KNIGHT_ATTACKS, KING_ATTACKS, ROOK_RAYS, BISHOP_RAYS, PAWN_ATTACKERS = _build_tables()


def attacked(squares, sq: Square, by: Color) -> bool:
    """True if any piece of color `by` attacks `sq` on the given occupancy."""
    base = by * 6
    for psq in PAWN_ATTACKERS[by][sq]:
        if squares[psq] == base + _PAWN:
            return True
    knight = base + _KNIGHT
    for psq in KNIGHT_ATTACKS[sq]:
        if squares[psq] == knight:
            return True
    king = base + _KING
    for psq in KING_ATTACKS[sq]:
        if squares[psq] == king:
            return True
    rook, bishop, queen = base + _ROOK, base + _BISHOP, base + _QUEEN
    for ray in ROOK_RAYS[sq]:
        for psq in ray:
            code = squares[psq]
            if code != EMPTY:
                if code == rook or code == queen:
                    return True
                break
    for ray in BISHOP_RAYS[sq]:
        for psq in ray:
            code = squares[psq]
            if code != EMPTY:
                if code == bishop or code == queen:
                    return True
                break
    return False


def is_in_check(board: Board, color: Color) -> bool:
    """True iff `color`'s king square is attacked by the other side."""
    return attacked(board._squares, board.king_square(color), Color(color).other)


def _pseudo_moves_from(board: Board, frm: Square) -> list[Move]:
    """Rule-shaped candidates for the piece on `frm`, king safety ignored."""
    squares = board._squares
    us = board.side_to_move
    them = us.other
    base = us * 6
    code = squares[frm]
    ptype = code - base
    moves = []

    if ptype == _PAWN:
        fwd = 8 if us == Color.WHITE else -8
        home_rank = 1 if us == Color.WHITE else 6
        last_rank = 7 if us == Color.WHITE else 0
        rank = frm >> 3

        def emit(to):
            if (to >> 3) == last_rank:
                moves.extend(Move(frm, to, p) for p in PROMOTION_TYPES)
            else:
                moves.append(Move(frm, to))

        if squares[frm + fwd] == EMPTY:
            emit(frm + fwd)
            if rank == home_rank and squares[frm + 2 * fwd] == EMPTY:
                moves.append(Move(frm, frm + 2 * fwd))
        file = frm & 7
        for df in (-1, 1):
            if 0 <= file + df <= 7:
                to = frm + fwd + df
                occ = squares[to]
                if (occ != EMPTY and occ // 6 == them) or to == board.en_passant_target:
                    emit(to)
    elif ptype == _KNIGHT:
        for to in KNIGHT_ATTACKS[frm]:
            occ = squares[to]
            if occ == EMPTY or occ // 6 == them:
                moves.append(Move(frm, to))
    elif ptype == _KING:
        for to in KING_ATTACKS[frm]:
            occ = squares[to]
            if occ == EMPTY or occ // 6 == them:
                moves.append(Move(frm, to))
        moves.extend(_castling_moves(board))
    else:
        rays = ()
        if ptype in (_ROOK, _QUEEN):
            rays += ROOK_RAYS[frm]
        if ptype in (_BISHOP, _QUEEN):
            rays += BISHOP_RAYS[frm]
        for ray in rays:
            for to in ray:
                occ = squares[to]
                if occ == EMPTY:
                    moves.append(Move(frm, to))
                    continue
                if occ // 6 == them:
                    moves.append(Move(frm, to))
                break
    return moves


# per color: (kingside flag, queenside flag, king home, empty squares, transit square)
_CASTLE_RULES = (
    (Castling.WHITE_KINGSIDE, Castling.WHITE_QUEENSIDE, 4, ((5, 6), (1, 2, 3)), (5, 3)),
    (Castling.BLACK_KINGSIDE, Castling.BLACK_QUEENSIDE, 60, ((61, 62), (57, 58, 59)), (61, 59)),
)


def _castling_moves(board: Board) -> list[Move]:
    us = board.side_to_move
    squares = board._squares
    them = us.other
    kflag, qflag, home, empties, transits = _CASTLE_RULES[us]
    if board.king_square(us) != home or not board.castling & (kflag | qflag):
        return []
    if attacked(squares, home, them):
        return []
    moves = []
    if board.castling & kflag and all(squares[s] == EMPTY for s in empties[0]) \
            and not attacked(squares, transits[0], them):
        moves.append(Move(home, home + 2))
    if board.castling & qflag and all(squares[s] == EMPTY for s in empties[1]) \
            and not attacked(squares, transits[1], them):
        moves.append(Move(home, home - 2))
    return moves


def castling_candidates(board: Board) -> list[Move]:
    """Castling moves passing every availability rule except landing-square
    safety: rights, rook/king placement, empty path, no current check, and a
    safe transit square."""
    return _castling_moves(board)


def _leaves_king_safe(board: Board, move: Move) -> bool:
    """Play `move` on a scratch array and test the mover's king for attack."""
    us = board.side_to_move
    squares = list(board._squares)
    frm, to = move.from_sq, move.to_sq
    code = squares[frm]
    squares[frm] = EMPTY
    if code % 6 == _PAWN and to == board.en_passant_target and squares[to] == EMPTY:
        squares[to - 8 if us == Color.WHITE else to + 8] = EMPTY
    if code % 6 == _KING and abs(to - frm) == 2:
        rook_from = frm + 3 if to > frm else frm - 4
        rook_to = (frm + to) // 2
        squares[rook_to] = squares[rook_from]
        squares[rook_from] = EMPTY
    squares[to] = code
    king_sq = to if code % 6 == _KING else board.king_square(us)
    return not attacked(squares, king_sq, us.other)


def legal_moves_from(board: Board, frm: Square) -> list[Move]:
    """Legal moves of the side-to-move piece on `frm` (empty list if none)."""
    code = board._squares[frm]
    if code == EMPTY or code // 6 != board.side_to_move:
        return []
    return [m for m in _pseudo_moves_from(board, frm) if _leaves_king_safe(board, m)]


def legal_moves(board: Board) -> set[Move]:
    """Exactly the FIDE-legal moves; empty set on checkmate or stalemate."""
    base = board.side_to_move * 6
    squares = board._squares
    out = set()
    for frm in range(64):
        code = squares[frm]
        if 0 <= code - base < 6:
            for m in _pseudo_moves_from(board, frm):
                if _leaves_king_safe(board, m):
                    out.add(m)
    return out


def is_legal(board: Board, move: Move) -> bool:
    code = board._squares[move.from_sq]
    if code == EMPTY or code // 6 != board.side_to_move:
        return False
    return any(m == move for m in _pseudo_moves_from(board, move.from_sq)) \
        and _leaves_king_safe(board, move)


def apply_move(board: Board, move: Move) -> Board:
    """Apply a legal move, returning the successor position.

    Raises IllegalMove if `move` is not legal for the side to move.
    """
    if not is_legal(board, move):
        raise IllegalMove(f"{move!r} is not legal here")
    return apply_move_unchecked(board, move)


def legal_destinations(board: Board, frm: Square) -> set[Square]:
    """Destination squares of legal moves from `frm`, promotions collapsed.

    Raises EmptyOrOpponentSquare unless `frm` holds a side-to-move piece.
    """
    code = board._squares[frm]
    if code == EMPTY or code // 6 != board.side_to_move:
        raise EmptyOrOpponentSquare(f"no piece of the side to move on {frm}")
    return {m.to_sq for m in legal_moves_from(board, frm)}


def movable_squares_of_type(board: Board, ptype: PieceType) -> set[Square]:
    """Squares holding a side-to-move piece of `ptype` with at least one legal move."""
    code = board.side_to_move * 6 + ptype
    squares = board._squares
    return {
        frm for frm in range(64)
        if squares[frm] == code and any(
            _leaves_king_safe(board, m) for m in _pseudo_moves_from(board, frm)
        )
    }


def perft(board: Board, depth: int) -> int:
    """Count legal move sequences of exactly `depth` plies from `board`."""
    if depth < 0:
        raise ValueError("perft depth must be >= 0")
    if depth == 0:
        return 1
    moves = legal_moves(board)
    if depth == 1:
        return len(moves)
    return sum(perft(apply_move_unchecked(board, m), depth - 1) for m in moves)
