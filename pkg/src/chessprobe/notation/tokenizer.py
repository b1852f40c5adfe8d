"""Game tokenization under the UCI / UCI+RAP(p) / UCI+AP schemes.

A move becomes [piece-type?] from-square to-square [promotion]; whether the
piece-type token is emitted depends on the scheme: never for plain UCI,
always for AP, and independently with probability p per move for RAP(p).
No delimiter token separates moves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from ..chesscore import (
    Move,
    PieceType,
    apply_move_unchecked,
    initial_board,
    is_legal,
    square_name,
)
from .vocab import BOS, EOS, is_piece_type_token, is_promotion_token, is_square_token

_PROMO_LETTER = {
    PieceType.QUEEN: "q",
    PieceType.ROOK: "r",
    PieceType.BISHOP: "b",
    PieceType.KNIGHT: "n",
}
_LETTER_PROMO = {v: k for k, v in _PROMO_LETTER.items()}


class IllegalGame(Exception):
    """The move list is not sequentially legal from the starting position."""


class MalformedSequence(Exception):
    """The token sequence does not decode to a legal game."""


@dataclass(frozen=True)
class NotationScheme:
    """One of plain `uci`, `rap` with an insertion probability, or `ap`."""

    kind: str
    rap_p: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind not in ("uci", "rap", "ap"):
            raise ValueError(f"unknown scheme kind: {self.kind!r}")
        if self.kind == "rap":
            if self.rap_p is None or not 0.0 <= self.rap_p <= 1.0:
                raise ValueError("rap scheme needs a probability in [0, 1]")
        elif self.rap_p is not None:
            raise ValueError(f"{self.kind} scheme takes no probability")

    @classmethod
    def uci(cls) -> "NotationScheme":
        return cls("uci")

    @classmethod
    def rap(cls, p: float) -> "NotationScheme":
        return cls("rap", p)

    @classmethod
    def ap(cls) -> "NotationScheme":
        return cls("ap")

    @classmethod
    def parse(cls, text: str) -> "NotationScheme":
        """Parse the flag syntax `uci`, `ap`, or `rap:<p>`."""
        if text == "uci":
            return cls.uci()
        if text == "ap":
            return cls.ap()
        if text.startswith("rap:"):
            return cls.rap(float(text.split(":", 1)[1]))
        raise ValueError(f"unknown scheme: {text!r} (expected uci, ap, or rap:<p>)")

    def __str__(self) -> str:
        return f"rap:{self.rap_p:g}" if self.kind == "rap" else self.kind


@dataclass(frozen=True)
class TokenSequence:
    tokens: tuple[str, ...]
    scheme: NotationScheme

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def text(self) -> str:
        return " ".join(self.tokens)


def tokenize_game(
    moves: Sequence[Move],
    scheme: NotationScheme,
    rng: Optional[random.Random] = None,
) -> TokenSequence:
    """Render a legal game as tokens under `scheme`.

    RAP insertion decisions are i.i.d. Bernoulli(p) per move drawn from
    `rng`, which is required for RAP (even p=0, so that streams are
    reproducible from the seed alone). Raises IllegalGame if the moves do
    not replay legally from the starting position.
    """
    if scheme.kind == "rap" and rng is None:
        raise ValueError("rap tokenization requires a seeded rng")
    board = initial_board()
    tokens: list[str] = []
    for i, move in enumerate(moves):
        if not is_legal(board, move):
            raise IllegalGame(f"move {i} ({move!r}) is not legal")
        if scheme.kind == "ap":
            insert = True
        elif scheme.kind == "rap":
            insert = rng.random() < scheme.rap_p
        else:
            insert = False
        if insert:
            tokens.append(board.piece_at(move.from_sq).piece_type.letter)
        tokens.append(square_name(move.from_sq))
        tokens.append(square_name(move.to_sq))
        if move.promotion is not None:
            tokens.append(_PROMO_LETTER[move.promotion])
        board = apply_move_unchecked(board, move)
    return TokenSequence(tuple(tokens), scheme)


def detokenize(tokens: TokenSequence | Iterable[str]) -> list[Move]:
    """Decode tokens back into the move list, replaying for legality.

    Piece-type tokens are skipped; BOS/EOS are tolerated at the sequence
    boundaries. Raises MalformedSequence on dangling squares, stray special
    tokens, promotion tokens that do not follow a promoting pawn move, or a
    replay that is not legal.
    """
    if isinstance(tokens, TokenSequence):
        tokens = tokens.tokens
    items = list(tokens)
    if items and items[0] == BOS:
        items = items[1:]
    if items and items[-1] == EOS:
        items = items[:-1]

    moves: list[Move] = []
    board = initial_board()
    i = 0
    n = len(items)
    while i < n:
        token = items[i]
        if is_piece_type_token(token):
            i += 1
            continue
        if not is_square_token(token):
            raise MalformedSequence(f"unexpected token {token!r} at position {i}")
        if i + 1 >= n:
            raise MalformedSequence(f"dangling from-square {token!r}")
        to_token = items[i + 1]
        if not is_square_token(to_token):
            raise MalformedSequence(f"expected to-square after {token!r}, got {to_token!r}")
        promotion = None
        i += 2
        if i < n and is_promotion_token(items[i]):
            promotion = _LETTER_PROMO[items[i]]
            i += 1
        try:
            move = Move(
                from_sq=_square_index(token),
                to_sq=_square_index(to_token),
                promotion=promotion,
            )
        except ValueError as exc:
            raise MalformedSequence(str(exc)) from None
        if not is_legal(board, move):
            raise MalformedSequence(f"move {len(moves)} ({move!r}) does not replay legally")
        board = apply_move_unchecked(board, move)
        moves.append(move)
    return moves


def _square_index(name: str) -> int:
    return "abcdefgh".index(name[0]) + 8 * ("12345678".index(name[1]))


def write_token_file(
    path: str | Path,
    games: Iterable[Sequence[Move]],
    scheme: NotationScheme,
    rng: Optional[random.Random] = None,
) -> int:
    """Write one game per line (space-separated tokens, BOS/EOS framed).

    Returns the number of games written. One rng per output stream; never
    share a generator across concurrent writers.
    """
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for moves in games:
            seq = tokenize_game(moves, scheme, rng)
            fh.write(f"{BOS} {seq.text()} {EOS}\n" if seq.tokens else f"{BOS} {EOS}\n")
            count += 1
    return count


def read_token_file(path: str | Path) -> list[list[str]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(line.split(" "))
    return out
