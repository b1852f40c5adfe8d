"""Vocabulary file loading with a toolkit-compatibility hash check.

The toolkit's 77-token vocabulary is frozen; its file has a known SHA-256.
We read the file for the actual token order rather than assuming it, but
abort on any file that is not byte-identical to the toolkit's.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

TOOLKIT_VOCAB_SHA256 = "2b09f930b3b2f69c03ea10719450501e5dcaaa8866b1d985b8e8750dadd7a134"
VOCAB_SIZE = 77

PIECE_TYPE_TOKENS = frozenset("PNBRQK")


class VocabularyMismatch(Exception):
    """The vocabulary file does not match the toolkit's frozen vocabulary."""


def load_vocabulary(path: str | Path) -> list[str]:
    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != TOOLKIT_VOCAB_SHA256:
        raise VocabularyMismatch(
            f"{path}: sha256 {digest} != expected {TOOLKIT_VOCAB_SHA256}")
    tokens = raw.decode("utf-8").splitlines()
    if len(tokens) != VOCAB_SIZE:
        raise VocabularyMismatch(f"{path}: expected {VOCAB_SIZE} tokens")
    return tokens
