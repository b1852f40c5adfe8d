"""Game records, duplicate/length filtering, and the corpus file format.

A corpus file holds one game per line: `id<TAB>source<TAB>uci moves`. Ids
are stable hashes of the UCI move string, so identical games collide by
construction.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..chesscore import Move
from ..notation import uci_parse, uci_print

MIN_PLIES = 10
MAX_PLIES = 150


def game_id_for(uci_movetext: str) -> str:
    """Stable 16-hex-digit id of a game's space-separated UCI move string."""
    return hashlib.blake2b(uci_movetext.encode("ascii"), digest_size=8).hexdigest()


@dataclass(frozen=True)
class GameRecord:
    id: str
    moves: tuple[Move, ...]
    source: str = ""

    def uci(self) -> str:
        return " ".join(uci_print(m) for m in self.moves)


def filter_and_dedupe(
    games: Iterable[GameRecord],
    min_plies: int = MIN_PLIES,
    max_plies: int = MAX_PLIES,
) -> list[GameRecord]:
    """Drop duplicate move sequences and games outside the length band.

    Output is in stable id order; the pass is idempotent.
    """
    seen: dict[str, GameRecord] = {}
    for game in games:
        if not min_plies <= len(game.moves) <= max_plies:
            continue
        seen.setdefault(game.id, game)
    return [seen[gid] for gid in sorted(seen)]


def write_corpus_file(path: str | Path, games: Sequence[GameRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for game in games:
            fh.write(f"{game.id}\t{game.source}\t{game.uci()}\n")


def read_corpus_file(path: str | Path) -> list[GameRecord]:
    """Read a corpus file, verifying each line's id against its moves."""
    games = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                gid, source, movetext = line.split("\t")
            except ValueError:
                raise ValueError(f"{path}:{line_no}: expected 3 tab-separated fields") from None
            if game_id_for(movetext) != gid:
                raise ValueError(f"{path}:{line_no}: id does not match move string")
            moves = tuple(uci_parse(u) for u in movetext.split())
            games.append(GameRecord(gid, moves, source))
    return games
