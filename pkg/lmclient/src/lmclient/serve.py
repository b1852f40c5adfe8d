"""Batch prediction serving over the probe/prediction file protocol.

For each probe the model consumes prefix + prompt and scores the next
token over the whole vocabulary. Piece-type entries are forced to -inf
before normalization when masking is on (they never occur at inference
time). Output rows are probabilities in vocabulary order, written in
probe-file order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .models import NextTokenModel, load_model
from .probes import read_probe_rows
from .vocab import PIECE_TYPE_TOKENS, load_vocabulary


@dataclass(frozen=True)
class ClientConfig:
    vocab_path: str
    probe_path: str
    out_path: str
    model: str = "stub"
    mask_piece_types: bool = True
    seed: int = 0


def _normalize(scores: Sequence[float], masked: Sequence[bool]) -> list[float]:
    """Softmax over unmasked entries; masked entries get probability zero."""
    live = [s for s, m in zip(scores, masked) if not m]
    top = max(live)
    exps = [0.0 if m else math.exp(s - top) for s, m in zip(scores, masked)]
    total = sum(exps)
    return [e / total for e in exps]


def serve_predictions(cfg: ClientConfig,
                      model: NextTokenModel | None = None) -> int:
    """Write one prediction row per probe; returns the number of rows."""
    vocab = load_vocabulary(cfg.vocab_path)
    masked = [cfg.mask_piece_types and t in PIECE_TYPE_TOKENS for t in vocab]
    if model is None:
        model = load_model(cfg.model, seed=cfg.seed)
    rows = 0
    probes = read_probe_rows(cfg.probe_path)
    with open(cfg.out_path, "w", encoding="utf-8", newline="\n") as fh:
        for probe in probes:
            context = list(probe.prefix_tokens) + [probe.prompt]
            scores = model.next_scores(probe.probe_id, context, vocab)
            if len(scores) != len(vocab):
                raise ValueError(f"model returned {len(scores)} scores for {probe.probe_id}")
            probs = _normalize(scores, masked)
            if not all(math.isfinite(p) for p in probs):
                raise ValueError(f"non-finite probabilities for {probe.probe_id}")
            fh.write(probe.probe_id + "\t" + " ".join(f"{p:.9g}" for p in probs) + "\n")
            rows += 1
    return rows
