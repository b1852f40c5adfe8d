"""Next-token scorers: the uniform stub and a small causal transformer.

A model maps (probe id, context tokens) to one raw score per vocabulary
entry. The stub scores every token equally, plus a tiny seeded jitter so
that downstream argmax over the written row behaves as an unbiased uniform
draw instead of resolving ties by vocabulary order.
"""

from __future__ import annotations

import hashlib
import random
from typing import Protocol, Sequence


class NextTokenModel(Protocol):
    def next_scores(self, probe_id: str, context: Sequence[str],
                    vocab: Sequence[str]) -> list[float]:
        ...


# step between adjacent jitter levels: big enough that every written
# probability stays distinct at 9 significant digits, small enough to keep
# rows uniform to well under 1e-6
_JITTER_STEP = 1e-7


class StubUniformModel:
    """Uniform belief over the vocabulary, with seeded tie-breaking jitter.

    The jitter is an equally spaced ladder dealt by a seeded permutation, so
    downstream argmax over a written row is an exactly uniform draw over the
    unmasked tokens rather than a vocabulary-order tie resolution.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed

    def next_scores(self, probe_id: str, context: Sequence[str],
                    vocab: Sequence[str]) -> list[float]:
        digest = hashlib.blake2b(f"{self.seed}:{probe_id}".encode(), digest_size=8).digest()
        rng = random.Random(int.from_bytes(digest, "big"))
        ranks = list(range(len(vocab)))
        rng.shuffle(ranks)
        return [r * _JITTER_STEP for r in ranks]


class CheckpointModel:
    """A small causal transformer loaded from a torch checkpoint."""

    def __init__(self, path: str):
        import torch  # heavy import, deferred until a checkpoint is used

        from .tinylm import TinyCausalLM

        self._torch = torch
        self.model = TinyCausalLM.load(path)
        self.model.eval()

    def next_scores(self, probe_id: str, context: Sequence[str],
                    vocab: Sequence[str]) -> list[float]:
        torch = self._torch
        index = {t: i for i, t in enumerate(vocab)}
        try:
            ids = [index[t] for t in context]
        except KeyError as exc:
            raise ValueError(f"context token not in vocabulary: {exc}") from None
        with torch.no_grad():
            logits = self.model(torch.tensor([ids], dtype=torch.long))[0, -1]
        return [float(x) for x in logits]


def load_model(source: str, seed: int = 0) -> NextTokenModel:
    """`stub` for the uniform stub, anything else is a checkpoint path."""
    if source == "stub":
        return StubUniformModel(seed)
    return CheckpointModel(source)
