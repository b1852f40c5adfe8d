"""Canonical (move-level) perplexity from supplied token log-probabilities.

One move counts as one unit: exp of the total negative log-probability over
all games divided by the total move count. Predictors that reserve mass for
piece-type tokens (which never appear at inference time) can have their
per-token log-probabilities renormalized over the remaining vocabulary by
supplying the per-step piece-type log-mass.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from ..chesscore import Move


class LengthMismatch(Exception):
    """Supplied log-probabilities do not line up with the games' tokens."""


def uci_token_count(moves: Sequence[Move]) -> int:
    """Number of plain-UCI tokens a game emits (2 per move, +1 per promotion)."""
    return sum(2 + (1 if m.promotion is not None else 0) for m in moves)


def canonical_perplexity(
    games: Sequence[Sequence[Move]],
    token_logprobs: Sequence[Sequence[float]],
    leading_bos: bool = False,
    piece_type_logmass: Optional[Sequence[Sequence[float]]] = None,
) -> float:
    """Move-level perplexity of plain-UCI games.

    `token_logprobs[i]` holds natural-log probabilities for every emitted
    token of game i, optionally preceded by one BOS entry when `leading_bos`
    is set. `piece_type_logmass[i][j]` is the log of the probability mass the
    predictor put on piece-type tokens at step j; supplying it renormalizes
    each step over the non-piece-type vocabulary.
    """
    if len(games) != len(token_logprobs):
        raise LengthMismatch(
            f"{len(games)} games but {len(token_logprobs)} log-prob rows")
    if not games:
        raise ValueError("no games supplied")
    if piece_type_logmass is not None and len(piece_type_logmass) != len(games):
        raise LengthMismatch("piece-type mass rows do not match the games")

    total_logprob = 0.0
    total_moves = 0
    for i, (moves, logprobs) in enumerate(zip(games, token_logprobs)):
        expected = uci_token_count(moves) + (1 if leading_bos else 0)
        if len(logprobs) != expected:
            raise LengthMismatch(
                f"game {i}: expected {expected} token log-probs, got {len(logprobs)}")
        if piece_type_logmass is None:
            total_logprob += math.fsum(logprobs)
        else:
            mass = piece_type_logmass[i]
            if len(mass) != len(logprobs):
                raise LengthMismatch(f"game {i}: piece-type mass length mismatch")
            for lp, piece_mass in zip(logprobs, mass):
                if piece_mass >= 0.0:
                    raise ValueError("piece-type mass must be log of a probability < 1")
                total_logprob += lp - math.log1p(-math.exp(piece_mass))
        total_moves += len(moves)

    if total_moves == 0:
        raise ValueError("no moves to score")
    return math.exp(-total_logprob / total_moves)
