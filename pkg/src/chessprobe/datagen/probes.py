"""Board-state probe construction with exact gold answer sets.

A probe is a plain-UCI game prefix plus one prompt token. All four task
kinds share the same sampled (game, prefix-length) pairs: the ending-square
kinds prompt with a starting square and expect destination squares, the
starting-square kinds prompt with a piece type and expect the squares of
movable pieces of that type. Prompts are restricted to non-pawn pieces, and
a prefix is only used if it is not a prefix of any training game.
"""

from __future__ import annotations

import enum
import hashlib
import random
from bisect import bisect_left
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Optional, Sequence

from ..chesscore import (
    Board,
    PieceType,
    apply_move_unchecked,
    initial_board,
    is_legal,
    legal_moves,
    parse_square,
    square_name,
)
from ..notation import detokenize, is_piece_type_token, is_square_token
from .corpus import GameRecord

PREFIX_MIN = 51
PREFIX_MAX = 100


class ExhaustedPool(Exception):
    """The probe pool cannot supply the requested number of instances."""


class ProbeKind(enum.Enum):
    END_ACTUAL = "end-actual"
    END_OTHER = "end-other"
    START_ACTUAL = "start-actual"
    START_OTHER = "start-other"

    @property
    def is_end(self) -> bool:
        return self in (ProbeKind.END_ACTUAL, ProbeKind.END_OTHER)

    @property
    def is_actual(self) -> bool:
        return self in (ProbeKind.END_ACTUAL, ProbeKind.START_ACTUAL)


@dataclass(frozen=True)
class ProbeInstance:
    probe_id: str
    game_id: str
    prefix_len: int
    prefix_tokens: tuple[str, ...]
    kind: ProbeKind
    prompt: str
    exm_gold: Optional[str]
    lgm_gold: frozenset[str]

    def __post_init__(self) -> None:
        if self.kind.is_end and not is_square_token(self.prompt):
            raise ValueError("ending-square probes prompt with a square token")
        if not self.kind.is_end:
            if not is_piece_type_token(self.prompt):
                raise ValueError("starting-square probes prompt with a piece-type token")
            if self.prompt == "P":
                raise ValueError("prompts are restricted to non-pawn pieces")
        if not self.lgm_gold:
            raise ValueError("empty gold answer set")
        if self.exm_gold is not None and self.exm_gold not in self.lgm_gold:
            raise ValueError("exact-move gold outside the legal-move gold set")
        if (self.exm_gold is not None) != self.kind.is_actual:
            raise ValueError("exact-move gold present iff the probe is an *-Actual kind")


_PROMO_LETTER = {PieceType.QUEEN: "q", PieceType.ROOK: "r",
                 PieceType.BISHOP: "b", PieceType.KNIGHT: "n"}


def game_tokens(game: GameRecord) -> tuple[list[str], list[int]]:
    """Plain-UCI tokens of a game plus per-move token offsets."""
    tokens: list[str] = []
    offsets = [0]
    for move in game.moves:
        tokens.append(square_name(move.from_sq))
        tokens.append(square_name(move.to_sq))
        if move.promotion is not None:
            tokens.append(_PROMO_LETTER[move.promotion])
        offsets.append(len(tokens))
    return tokens, offsets


def prefix_board(probe: ProbeInstance) -> Board:
    """Replay the probe's prefix tokens into the position being probed."""
    board = initial_board()
    for move in detokenize(probe.prefix_tokens):
        board = apply_move_unchecked(board, move)
    return board


def _pair_rng(seed: int, game_id: str, prefix_len: int) -> random.Random:
    digest = hashlib.blake2b(f"{seed}:{game_id}:{prefix_len}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _build_for_pair(game: GameRecord, prefix_len: int, seed: int,
                    prefix_tokens: tuple[str, ...]) -> Optional[list[ProbeInstance]]:
    """All four probe kinds for one (game, prefix length) pair, or None if invalid."""
    board = initial_board()
    for i in range(prefix_len):
        move = game.moves[i]
        if not is_legal(board, move):
            raise ValueError(f"game {game.id}: move {i} does not replay legally")
        board = apply_move_unchecked(board, move)
    actual = game.moves[prefix_len]
    mover = board.piece_at(actual.from_sq)
    if mover is None or mover.piece_type == PieceType.PAWN:
        return None

    legal = legal_moves(board)
    dests_from: dict[int, set[int]] = {}
    for m in legal:
        dests_from.setdefault(m.from_sq, set()).add(m.to_sq)
    types_at = {sq: board.piece_at(sq).piece_type for sq in dests_from}

    nonpawn_squares = sorted(sq for sq, t in types_at.items() if t != PieceType.PAWN)
    other_squares = [sq for sq in nonpawn_squares if sq != actual.from_sq]
    other_types = sorted({t for t in types_at.values() if t != PieceType.PAWN}
                         - {mover.piece_type})
    if not other_squares or not other_types:
        return None

    rng = _pair_rng(seed, game.id, prefix_len)
    other_sq = rng.choice(other_squares)
    other_type = rng.choice(other_types)

    def squares_of_type(t: PieceType) -> frozenset[str]:
        return frozenset(square_name(sq) for sq, ty in types_at.items() if ty == t)

    def dest_names(frm: int) -> frozenset[str]:
        return frozenset(square_name(sq) for sq in dests_from[frm])

    def make(kind: ProbeKind, prompt: str, exm: Optional[str], lgm: frozenset[str]):
        return ProbeInstance(
            probe_id=f"{game.id}:{prefix_len}:{kind.value}",
            game_id=game.id,
            prefix_len=prefix_len,
            prefix_tokens=prefix_tokens,
            kind=kind,
            prompt=prompt,
            exm_gold=exm,
            lgm_gold=lgm,
        )

    return [
        make(ProbeKind.END_ACTUAL, square_name(actual.from_sq),
             square_name(actual.to_sq), dest_names(actual.from_sq)),
        make(ProbeKind.END_OTHER, square_name(other_sq), None, dest_names(other_sq)),
        make(ProbeKind.START_ACTUAL, mover.piece_type.letter,
             square_name(actual.from_sq), squares_of_type(mover.piece_type)),
        make(ProbeKind.START_OTHER, other_type.letter, None, squares_of_type(other_type)),
    ]


def build_probes(
    probe_pool: Sequence[GameRecord],
    train_split: Sequence[GameRecord],
    n: int,
    seed: int,
    prefix_min: int = PREFIX_MIN,
    prefix_max: int = PREFIX_MAX,
    workers: int = 1,
) -> list[ProbeInstance]:
    """Sample n (game, prefix) pairs and emit 4n probes, n per task kind.

    Pairs are drawn without replacement from the pool; a pair is accepted
    only if the actual next move is by a non-pawn piece, another non-pawn
    piece/type is movable, and the prefix was never seen in the training
    split. Output order is (game_id, prefix_len, kind), independent of the
    worker count. Raises ExhaustedPool when the pool cannot supply n pairs.
    """
    pool_ids = {g.id for g in probe_pool}
    if pool_ids & {g.id for g in train_split}:
        raise ValueError("probe pool overlaps the training split")

    games = sorted(probe_pool, key=lambda g: g.id)
    token_cache = {g.id: game_tokens(g) for g in games}
    train_strings = sorted(" ".join(game_tokens(g)[0]) + " " for g in train_split)

    def seen_in_training(prefix: Sequence[str]) -> bool:
        text = " ".join(prefix) + " "
        i = bisect_left(train_strings, text)
        return i < len(train_strings) and train_strings[i].startswith(text)

    # implicit (game, prefix_len) pair space, indexed via cumulative counts
    counts = []
    for g in games:
        top = min(prefix_max, len(g.moves) - 1)
        counts.append(max(0, top - prefix_min + 1))
    cumulative = [0]
    for c in counts:
        cumulative.append(cumulative[-1] + c)
    total = cumulative[-1]
    if total < n:
        raise ExhaustedPool(f"pool has {total} candidate pairs, need {n}")

    def pair_at(index: int) -> tuple[GameRecord, int]:
        gi = bisect_left(cumulative, index + 1) - 1
        return games[gi], prefix_min + (index - cumulative[gi])

    rng = random.Random(seed)
    drawn: set[int] = set()

    def draw_candidates(k: int) -> list[tuple[GameRecord, int, tuple[str, ...]]]:
        """Next k pairs (in draw order) passing the cheap prefix check."""
        out = []
        while len(out) < k and len(drawn) < total:
            index = rng.randrange(total)
            if index in drawn:
                continue
            drawn.add(index)
            game, prefix_len = pair_at(index)
            tokens, offsets = token_cache[game.id]
            prefix = tuple(tokens[: offsets[prefix_len]])
            if seen_in_training(prefix):
                continue
            out.append((game, prefix_len, prefix))
        return out

    accepted: list[list[ProbeInstance]] = []
    pool = Pool(workers) if workers > 1 else None
    try:
        while len(accepted) < n:
            batch = draw_candidates(max(n - len(accepted), 16))
            if not batch and len(drawn) >= total:
                raise ExhaustedPool(
                    f"pool exhausted after {len(accepted)} of {n} requested pairs")
            if pool is not None:
                results = pool.starmap(
                    _build_for_pair,
                    [(g, l, seed, p) for g, l, p in batch],
                )
            else:
                results = [_build_for_pair(g, l, seed, p) for g, l, p in batch]
            for result in results:
                if result is not None and len(accepted) < n:
                    accepted.append(result)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    kind_order = {kind: i for i, kind in enumerate(ProbeKind)}
    probes = [p for group in accepted for p in group]
    probes.sort(key=lambda p: (p.game_id, p.prefix_len, kind_order[p.kind]))
    return probes


def prompt_piece_letter(probe: ProbeInstance, board: Optional[Board] = None) -> str:
    """Piece-type letter of the prompt: the prompt itself for Start-* probes,
    the occupant of the prompt square for End-* probes."""
    if not probe.kind.is_end:
        return probe.prompt
    if board is None:
        board = prefix_board(probe)
    piece = board.piece_at(parse_square(probe.prompt))
    if piece is None:
        raise ValueError(f"probe {probe.probe_id}: prompt square is empty")
    return piece.piece_type.letter


def prompt_piece_counts(probes: Sequence[ProbeInstance]) -> dict[ProbeKind, dict[str, int]]:
    """Per-kind prompt piece-type counts, replaying each shared prefix once."""
    boards: dict[tuple[str, int], Board] = {}
    counts: dict[ProbeKind, dict[str, int]] = {}
    for probe in probes:
        key = (probe.game_id, probe.prefix_len)
        if key not in boards:
            boards[key] = prefix_board(probe)
        letter = prompt_piece_letter(probe, boards[key])
        kind_counts = counts.setdefault(probe.kind, {})
        kind_counts[letter] = kind_counts.get(letter, 0) + 1
    return counts


def write_probe_file(path: str | Path, probes: Sequence[ProbeInstance]) -> None:
    """One probe per line: id, kind, prefix tokens, prompt, exm, lgm."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p in probes:
            fh.write("\t".join((
                p.probe_id,
                p.kind.value,
                " ".join(p.prefix_tokens),
                p.prompt,
                p.exm_gold if p.exm_gold is not None else "-",
                ",".join(sorted(p.lgm_gold)),
            )) + "\n")


def read_probe_file(path: str | Path) -> list[ProbeInstance]:
    probes = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise ValueError(f"{path}:{line_no}: expected 6 tab-separated fields")
            probe_id, kind_text, prefix_text, prompt, exm, lgm = parts
            try:
                game_id, l_text, id_kind = probe_id.split(":")
                kind = ProbeKind(kind_text)
            except ValueError:
                raise ValueError(f"{path}:{line_no}: malformed id or kind") from None
            if id_kind != kind.value:
                raise ValueError(f"{path}:{line_no}: id kind does not match kind field")
            probes.append(ProbeInstance(
                probe_id=probe_id,
                game_id=game_id,
                prefix_len=int(l_text),
                prefix_tokens=tuple(prefix_text.split(" ")),
                kind=kind,
                prompt=prompt,
                exm_gold=None if exm == "-" else exm,
                lgm_gold=frozenset(lgm.split(",")),
            ))
    return probes
