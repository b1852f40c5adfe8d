"""The fixed 77-token model vocabulary and its file format.

64 square names, 6 uppercase piece types, 4 lowercase promoted-pawn types,
and 3 special symbols. The serialized ordering (squares a1..a8..h8
file-major, then piece types, promotions, specials) is arbitrary but frozen;
consumers must read the file rather than assume the order.
"""

from __future__ import annotations

from pathlib import Path

SQUARE_TOKENS = tuple(f + r for f in "abcdefgh" for r in "12345678")
PIECE_TYPE_TOKENS = ("P", "N", "B", "R", "Q", "K")
PROMOTION_TOKENS = ("q", "r", "b", "n")
SPECIAL_TOKENS = ("BOS", "EOS", "PAD")

BOS, EOS, PAD = SPECIAL_TOKENS

_VOCABULARY = SQUARE_TOKENS + PIECE_TYPE_TOKENS + PROMOTION_TOKENS + SPECIAL_TOKENS
_INDEX = {token: i for i, token in enumerate(_VOCABULARY)}

_SQUARE_SET = frozenset(SQUARE_TOKENS)
_PIECE_SET = frozenset(PIECE_TYPE_TOKENS)
_PROMO_SET = frozenset(PROMOTION_TOKENS)


def vocabulary() -> list[str]:
    """All 77 tokens in the frozen serialization order."""
    return list(_VOCABULARY)


def vocabulary_size() -> int:
    return len(_VOCABULARY)


def token_index(token: str) -> int:
    try:
        return _INDEX[token]
    except KeyError:
        raise KeyError(f"not a vocabulary token: {token!r}") from None


def is_square_token(token: str) -> bool:
    return token in _SQUARE_SET


def is_piece_type_token(token: str) -> bool:
    return token in _PIECE_SET


def is_promotion_token(token: str) -> bool:
    return token in _PROMO_SET


def write_vocabulary_file(path: str | Path) -> None:
    """One token per line, index = line number, UTF-8, LF endings."""
    Path(path).write_bytes(("\n".join(_VOCABULARY) + "\n").encode("utf-8"))


def read_vocabulary_file(path: str | Path) -> list[str]:
    tokens = Path(path).read_text(encoding="utf-8").splitlines()
    if tokens != list(_VOCABULARY):
        raise ValueError(f"{path}: not the frozen 77-token vocabulary")
    return tokens
