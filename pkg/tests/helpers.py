"""Shared test machinery: oracle conversions, self-play corpora, PGN fixtures."""

from __future__ import annotations

import random

from chessprobe.chesscore import (
    Board,
    Color,
    Move,
    PieceType,
    apply_move_unchecked,
    initial_board,
    legal_moves,
    square,
    square_file,
    square_rank,
)
from chessprobe.datagen import GameRecord, game_id_for
from chessprobe.notation import uci_print

from oracle import OracleBoard, oracle_san

_PROMO_LETTERS = {
    PieceType.QUEEN: "q",
    PieceType.ROOK: "r",
    PieceType.BISHOP: "b",
    PieceType.KNIGHT: "n",
}
_LETTER_PROMOS = {v: k for k, v in _PROMO_LETTERS.items()}


def move_to_oracle(move: Move):
    promo = _PROMO_LETTERS[move.promotion] if move.promotion else ""
    return (
        (square_file(move.from_sq), square_rank(move.from_sq)),
        (square_file(move.to_sq), square_rank(move.to_sq)),
        promo,
    )


def move_from_oracle(omove) -> Move:
    (ff, fr), (tf, tr), promo = omove
    return Move(square(ff, fr), square(tf, tr), _LETTER_PROMOS.get(promo))


def board_to_oracle(board: Board) -> OracleBoard:
    pieces = {}
    for sq, piece in board.occupancy().items():
        color = "w" if piece.color == Color.WHITE else "b"
        pieces[(square_file(sq), square_rank(sq))] = color + piece.piece_type.letter
    castle = set()
    for right, flag in (("K", (Color.WHITE, True)), ("Q", (Color.WHITE, False)),
                        ("k", (Color.BLACK, True)), ("q", (Color.BLACK, False))):
        if board.has_castling_right(*flag):
            castle.add(right)
    ep = None
    if board.en_passant_target is not None:
        ep = (square_file(board.en_passant_target), square_rank(board.en_passant_target))
    return OracleBoard(pieces, "w" if board.side_to_move == Color.WHITE else "b", castle, ep)


_PIECE_VALUE = {
    PieceType.PAWN: 1.0,
    PieceType.KNIGHT: 3.0,
    PieceType.BISHOP: 3.0,
    PieceType.ROOK: 5.0,
    PieceType.QUEEN: 9.0,
    PieceType.KING: 0.0,
}
_CENTER = {square(f, r) for f in (2, 3, 4, 5) for r in (2, 3, 4, 5)}


def _policy_score(board: Board, move: Move, rng: random.Random) -> float:
    """Noisy policy with a mild capture/center/castling bias.

    The capture weight is deliberately small: heavier trading empties the
    board by the probing plies (51-100), which drags the probe-set gold-set
    sizes away from what real master corpora produce.
    """
    score = rng.uniform(0.0, 4.0)
    victim = board.piece_at(move.to_sq)
    mover = board.piece_at(move.from_sq)
    if victim is not None:
        score += _PIECE_VALUE[victim.piece_type] * 0.12
    elif move.to_sq == board.en_passant_target and mover.piece_type == PieceType.PAWN:
        score += 0.12
    if move.promotion == PieceType.QUEEN:
        score += 6.0
    if move.to_sq in _CENTER:
        score += 0.3
    if mover.piece_type == PieceType.KING \
            and abs(square_file(move.to_sq) - square_file(move.from_sq)) == 2:
        score += 3.0
    return score


def selfplay_moves(rng: random.Random, max_plies: int = 140) -> list[Move]:
    board = initial_board()
    moves: list[Move] = []
    for _ in range(max_plies):
        legal = sorted(legal_moves(board), key=repr)
        if not legal:
            break
        move = max(legal, key=lambda m: _policy_score(board, m, rng))
        moves.append(move)
        board = apply_move_unchecked(board, move)
    return moves


def selfplay_corpus(seed: int, n_games: int, max_plies: int = 140,
                    source: str = "selfplay") -> list[GameRecord]:
    rng = random.Random(seed)
    games = []
    for _ in range(n_games):
        moves = selfplay_moves(random.Random(rng.getrandbits(48)),
                               max_plies=rng.randint(min(70, max_plies), max_plies))
        uci = " ".join(uci_print(m) for m in moves)
        games.append(GameRecord(game_id_for(uci), tuple(moves), source))
    return games


def random_positions(seed: int, count: int, max_plies: int = 90):
    """Positions reached by random legal playouts, including the start."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        board = initial_board()
        out.append(board)
        for _ in range(rng.randint(10, max_plies)):
            legal = sorted(legal_moves(board), key=repr)
            if not legal or len(out) >= count:
                break
            board = apply_move_unchecked(board, rng.choice(legal))
            out.append(board)
    return out[:count]


def game_to_pgn(moves: list[Move], headers: dict[str, str] | None = None) -> str:
    """Render one game as PGN movetext using the oracle SAN printer."""
    from oracle import oracle_apply, oracle_initial

    tags = {"Event": "fixture", "Result": "*"}
    if headers:
        tags.update(headers)
    lines = [f'[{key} "{value}"]' for key, value in tags.items()]
    lines.append("")
    ob = oracle_initial()
    parts = []
    for i, move in enumerate(moves):
        omove = move_to_oracle(move)
        san = oracle_san(ob, omove)
        if i % 2 == 0:
            parts.append(f"{i // 2 + 1}.")
        parts.append(san)
        ob = oracle_apply(ob, omove)
    parts.append(tags["Result"])
    lines.append(" ".join(parts))
    lines.append("")
    return "\n".join(lines)
