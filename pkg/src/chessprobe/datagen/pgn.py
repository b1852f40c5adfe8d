"""PGN import: tag pairs + SAN movetext, possibly multi-game.

Comments, variations, NAGs and results are stripped; the mainline SAN moves
are replayed through the rules engine. Games that fail to parse or replay
are skipped, each with a diagnostic, never fatally.
"""

from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass
from typing import IO, Iterable, Optional

from ..chesscore import apply_move_unchecked, initial_board
from ..notation import AmbiguousSan, NoLegalMatch, san_parse, uci_print
from .corpus import GameRecord, game_id_for

logger = logging.getLogger(__name__)

_TAG_RE = re.compile(r'^\[\s*(\w+)\s+"(.*)"\s*\]\s*$')
_MOVE_NUMBER_RE = re.compile(r"^\d+\.*$")
_NAG_RE = re.compile(r"^\$\d+$")
_RESULTS = {"1-0", "0-1", "1/2-1/2", "*"}


@dataclass
class IngestDiagnostic:
    game_index: int
    reason: str
    detail: str = ""


def ingest_pgn(
    stream: IO[str] | str,
    source_tag: str = "",
    diagnostics: Optional[list[IngestDiagnostic]] = None,
) -> list[GameRecord]:
    """Parse every game in a PGN stream into GameRecords.

    `stream` may be a file-like object or a PGN string. Unparseable games
    are skipped and logged; pass `diagnostics` to collect the reasons.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    records = []
    for index, (_headers, movetext) in enumerate(_split_games(stream)):
        try:
            san_tokens = _movetext_tokens(movetext)
        except ValueError as exc:
            _skip(diagnostics, index, "malformed movetext", str(exc))
            continue
        if not san_tokens:
            _skip(diagnostics, index, "no moves", "")
            continue
        board = initial_board()
        moves = []
        bad = None
        for san in san_tokens:
            try:
                move = san_parse(board, san)
            except (NoLegalMatch, AmbiguousSan) as exc:
                bad = f"{san}: {exc}"
                break
            board = apply_move_unchecked(board, move)
            moves.append(move)
        if bad is not None:
            _skip(diagnostics, index, "illegal or unparseable move", bad)
            continue
        uci = " ".join(uci_print(m) for m in moves)
        records.append(GameRecord(game_id_for(uci), tuple(moves), source_tag))
    return records


def _skip(diagnostics, index, reason, detail):
    logger.warning("skipping game %d: %s (%s)", index, reason, detail)
    if diagnostics is not None:
        diagnostics.append(IngestDiagnostic(index, reason, detail))


def _split_games(stream: Iterable[str]):
    """Yield (headers, movetext) pairs; a tag line after movetext starts a new game."""
    headers: dict[str, str] = {}
    movetext_parts: list[str] = []
    brace_depth = 0

    def flush():
        nonlocal headers, movetext_parts
        if headers or movetext_parts:
            yield_value = (headers, " ".join(movetext_parts))
            headers, movetext_parts = {}, []
            return yield_value
        return None

    for raw in stream:
        if raw.startswith("%"):  # PGN escape line
            continue
        line = raw.rstrip("\n")
        tag = _TAG_RE.match(line) if brace_depth == 0 else None
        if tag is not None:
            if movetext_parts:
                item = flush()
                if item is not None:
                    yield item
            headers[tag.group(1)] = tag.group(2)
            continue
        line, brace_depth = _strip_line_comment(line, brace_depth)
        stripped = line.strip()
        if stripped:
            movetext_parts.append(stripped)
    item = flush()
    if item is not None:
        yield item


def _strip_line_comment(line: str, brace_depth: int) -> tuple[str, int]:
    """Cut a `;` rest-of-line comment, tracking brace depth across lines."""
    out = []
    for ch in line:
        if ch == "{":
            brace_depth += 1
        elif ch == "}":
            brace_depth = max(brace_depth - 1, 0)
        elif ch == ";" and brace_depth == 0:
            break
        out.append(ch)
    return "".join(out), brace_depth


def _movetext_tokens(movetext: str) -> list[str]:
    """SAN tokens with comments, variations, NAGs, numbers and results removed."""
    # brace comments never nest; parenthesised variations do
    text = re.sub(r"\{[^}]*\}", " ", movetext)
    out = []
    depth = 0
    for token in text.split():
        opens = token.count("(")
        closes = token.count(")")
        if depth > 0:
            depth += opens - closes
            if depth < 0:
                raise ValueError("unbalanced variation parentheses")
            continue
        if opens:
            depth += opens - closes
            continue
        if _MOVE_NUMBER_RE.match(token) or _NAG_RE.match(token) or token in _RESULTS:
            continue
        # "1.e4" style glued move numbers
        glued = re.match(r"^\d+\.+(.*)$", token)
        if glued:
            token = glued.group(1)
            if not token:
                continue
        out.append(token)
    if depth != 0:
        raise ValueError("unbalanced variation parentheses")
    return out
