"""Per-probe scoring: exact-move and legal-move hits, R-Precision, taxonomy.

A prediction is a ranked token list (highest belief first). Exact-move
accuracy looks at the top token against the move actually played; legal-move
accuracy at the top token against the full gold set; R-Precision at the top
R tokens where R is the gold-set size. Illegal ending-square predictions are
classified into the error taxonomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..chesscore import Board, PieceType, is_in_check, king_distance, parse_square
from ..datagen import ProbeInstance, ProbeKind, prefix_board, prompt_piece_letter
from ..notation import is_square_token, token_index, vocabulary
from .taxonomy import (
    ErrorCategory,
    PseudoLegalSubcat,
    classify_illegal_end,
    subclassify_pseudo_legal,
)


@dataclass(frozen=True)
class Prediction:
    """Ranked next-token prediction for one probe."""

    probe_id: str
    ranked_tokens: tuple[str, ...]
    scores: Optional[tuple[float, ...]] = None

    def __post_init__(self) -> None:
        if not self.ranked_tokens:
            raise ValueError("prediction with no ranked tokens")
        if len(set(self.ranked_tokens)) != len(self.ranked_tokens):
            raise ValueError("duplicate tokens in ranking")
        for token in self.ranked_tokens:
            token_index(token)  # raises on out-of-vocabulary tokens


def ranked_from_scores(scores: Sequence[float]) -> tuple[str, ...]:
    """Full ranking from a 77-score row; ties break in vocabulary order."""
    vocab = vocabulary()
    if len(scores) != len(vocab):
        raise ValueError(f"expected {len(vocab)} scores, got {len(scores)}")
    order = sorted(range(len(vocab)), key=lambda i: (-scores[i], i))
    return tuple(vocab[i] for i in order)


@dataclass(frozen=True)
class ProbeScore:
    probe_id: str
    kind: ProbeKind
    prompt_piece: str
    top1: str
    exm_hit: Optional[bool]
    lgm_hit: bool
    r_precision: float
    ranks_truncated: bool
    category: Optional[ErrorCategory]
    non_square_top1: bool
    pseudo_subcat: Optional[PseudoLegalSubcat]
    check_before: bool
    prompt_is_king: bool
    king_dist_top1: Optional[int]


def score_probe(probe: ProbeInstance, prediction: Prediction,
                board: Optional[Board] = None) -> ProbeScore:
    """Score one prediction against one probe.

    `board` may be supplied to avoid replaying the prefix (callers scoring
    several kinds over the same prefix should pass it). Ending-square misses
    are classified; a top-1 that is not a square token at all is flagged and
    left outside the taxonomy.
    """
    if prediction.probe_id != probe.probe_id:
        raise ValueError(
            f"prediction for {prediction.probe_id} scored against {probe.probe_id}")
    if board is None:
        board = prefix_board(probe)

    ranked = prediction.ranked_tokens
    top1 = ranked[0]
    gold = probe.lgm_gold
    r = len(gold)
    r_precision = len(set(ranked[:r]) & gold) / r
    lgm_hit = top1 in gold
    exm_hit = (top1 == probe.exm_gold) if probe.kind.is_actual else None
    prompt_piece = prompt_piece_letter(probe, board)
    check_before = is_in_check(board, board.side_to_move)

    category: Optional[ErrorCategory] = None
    pseudo_subcat: Optional[PseudoLegalSubcat] = None
    non_square_top1 = False
    king_dist_top1: Optional[int] = None

    if probe.kind.is_end:
        if is_square_token(top1):
            frm = parse_square(probe.prompt)
            to = parse_square(top1)
            king_dist_top1 = king_distance(frm, to)
            if lgm_hit:
                category = ErrorCategory.LEGAL
            elif to == frm:
                # predicting the starting square itself: no piece type ever
                # makes a null hop
                category = ErrorCategory.UNREACHABLE
            else:
                category = classify_illegal_end(board, frm, to)
                if category == ErrorCategory.PSEUDO_LEGAL:
                    pseudo_subcat = subclassify_pseudo_legal(board, frm, to)
        else:
            non_square_top1 = True

    return ProbeScore(
        probe_id=probe.probe_id,
        kind=probe.kind,
        prompt_piece=prompt_piece,
        top1=top1,
        exm_hit=exm_hit,
        lgm_hit=lgm_hit,
        r_precision=r_precision,
        ranks_truncated=len(ranked) < r,
        category=category,
        non_square_top1=non_square_top1,
        pseudo_subcat=pseudo_subcat,
        check_before=check_before,
        prompt_is_king=prompt_piece == PieceType.KING.letter,
        king_dist_top1=king_dist_top1,
    )
