"""SAN move parsing against a position.

A SAN token names the piece type and destination; the matching legal move is
found by elimination. Decorations (x, +, #, !, ?) are accepted but never
required, and promotions may be written "=Q" or bare "Q", since PGN corpora
vary on both.
"""

from __future__ import annotations

import re

from ..chesscore import (
    Board,
    Move,
    PieceType,
    legal_moves,
    parse_square,
    square_file,
    square_rank,
)

_SAN_RE = re.compile(
    r"^(?P<piece>[KQRBN])?(?P<file>[a-h])?(?P<rank>[1-8])?x?(?P<dest>[a-h][1-8])"
    r"(?:=?(?P<promo>[QRBN]))?$"
)
_DECORATIONS = "+#!?"


class AmbiguousSan(Exception):
    """More than one legal move matches the SAN text."""


class NoLegalMatch(Exception):
    """No legal move matches the SAN text."""


def san_parse(board: Board, text: str) -> Move:
    raw = text
    text = text.rstrip(_DECORATIONS)
    if not text:
        raise NoLegalMatch(f"empty SAN token: {raw!r}")

    legal = legal_moves(board)

    if text in ("O-O", "0-0", "O-O-O", "0-0-0"):
        kingside = text in ("O-O", "0-0")
        home = board.king_square(board.side_to_move)
        target = home + 2 if kingside else home - 2
        for m in legal:
            if m.from_sq == home and m.to_sq == target \
                    and board.piece_at(home).piece_type == PieceType.KING:
                return m
        raise NoLegalMatch(f"castling not legal: {raw!r}")

    match = _SAN_RE.match(text)
    if match is None:
        raise NoLegalMatch(f"not a SAN move: {raw!r}")

    piece = match.group("piece")
    ptype = PieceType.from_letter(piece) if piece else PieceType.PAWN
    dest = parse_square(match.group("dest"))
    promo = PieceType.from_letter(match.group("promo")) if match.group("promo") else None
    file_hint = match.group("file")
    rank_hint = match.group("rank")

    candidates = []
    for m in legal:
        if m.to_sq != dest or m.promotion != promo:
            continue
        if board.piece_at(m.from_sq).piece_type != ptype:
            continue
        if file_hint and square_file(m.from_sq) != "abcdefgh".index(file_hint):
            continue
        if rank_hint and square_rank(m.from_sq) != int(rank_hint) - 1:
            continue
        candidates.append(m)

    if not candidates:
        raise NoLegalMatch(f"no legal move matches {raw!r}")
    if len(candidates) > 1:
        raise AmbiguousSan(f"{raw!r} matches {sorted(map(repr, candidates))}")
    return candidates[0]
