"""UCI move text: starting square + destination square (+ promotion letter)."""

from __future__ import annotations

from ..chesscore import Move, PieceType, parse_square, square_name

_PROMO_LETTERS = {
    PieceType.QUEEN: "q",
    PieceType.ROOK: "r",
    PieceType.BISHOP: "b",
    PieceType.KNIGHT: "n",
}
_LETTER_PROMOS = {v: k for k, v in _PROMO_LETTERS.items()}


class MalformedUci(Exception):
    """Raised for text that is not a well-formed UCI move."""


def uci_print(move: Move) -> str:
    text = square_name(move.from_sq) + square_name(move.to_sq)
    if move.promotion is not None:
        text += _PROMO_LETTERS[move.promotion]
    return text


def uci_parse(text: str) -> Move:
    if len(text) not in (4, 5):
        raise MalformedUci(f"bad length: {text!r}")
    try:
        frm = parse_square(text[0:2])
        to = parse_square(text[2:4])
    except ValueError as exc:
        raise MalformedUci(str(exc)) from None
    promotion = None
    if len(text) == 5:
        promotion = _LETTER_PROMOS.get(text[4])
        if promotion is None:
            raise MalformedUci(f"bad promotion letter: {text!r}")
    if frm == to:
        raise MalformedUci(f"from equals to: {text!r}")
    return Move(frm, to, promotion)
