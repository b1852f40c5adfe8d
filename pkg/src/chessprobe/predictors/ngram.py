"""Token n-gram reference model with additive smoothing.

A sanity baseline between Random Legal and trained language models. Context
never crosses game boundaries: each training line is one game, and contexts
shorter than order-1 are padded with BOS.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from pathlib import Path
from typing import Iterable, Sequence

from ..notation import BOS, vocabulary


class NGramModel:
    """Order-k token model: P(t | last k-1 tokens) with add-alpha smoothing."""

    def __init__(self, order: int, alpha: float = 1.0):
        if order < 1:
            raise ValueError("order must be >= 1")
        if alpha <= 0:
            raise ValueError("smoothing constant must be positive")
        self.order = order
        self.alpha = alpha
        self.vocab = vocabulary()
        self._vocab_index = {t: i for i, t in enumerate(self.vocab)}
        self.counts: dict[tuple[str, ...], Counter] = defaultdict(Counter)
        self.context_totals: dict[tuple[str, ...], int] = defaultdict(int)

    def _context(self, tokens: Sequence[str]) -> tuple[str, ...]:
        k = self.order - 1
        if k == 0:
            return ()
        window = list(tokens[-k:]) if len(tokens) >= k else \
            [BOS] * (k - len(tokens)) + list(tokens)
        return tuple(window)

    def fit(self, token_lines: Iterable[Sequence[str]]) -> "NGramModel":
        for line in token_lines:
            for i, token in enumerate(line):
                if token not in self._vocab_index:
                    raise ValueError(f"token {token!r} not in vocabulary")
                if i == 0:
                    continue  # nothing predicts the leading BOS
                context = self._context(line[:i])
                self.counts[context][token] += 1
                self.context_totals[context] += 1
        return self

    def next_distribution(self, context_tokens: Sequence[str]) -> list[float]:
        """Smoothed P(token | context) over the vocabulary; sums to 1."""
        context = self._context(context_tokens)
        seen = self.counts.get(context, ())
        total = self.context_totals.get(context, 0)
        denom = total + self.alpha * len(self.vocab)
        return [
            ((seen[t] if seen else 0) + self.alpha) / denom
            for t in self.vocab
        ]

    def save(self, path: str | Path) -> None:
        """Sorted (context, token, count) triples, tab-separated text."""
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for context in sorted(self.counts):
                for token, count in sorted(self.counts[context].items()):
                    fh.write(f"{' '.join(context)}\t{token}\t{count}\n")

    @classmethod
    def load(cls, path: str | Path, order: int, alpha: float = 1.0) -> "NGramModel":
        model = cls(order, alpha)
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                try:
                    context_text, token, count = line.split("\t")
                except ValueError:
                    raise ValueError(f"{path}:{line_no}: expected 3 fields") from None
                context = tuple(context_text.split(" ")) if context_text else ()
                if len(context) != order - 1:
                    raise ValueError(f"{path}:{line_no}: context length != order-1")
                model.counts[context][token] += int(count)
                model.context_totals[context] += int(count)
        return model


def ngram_next_distribution(model: NGramModel, context_tokens: Sequence[str]) -> list[float]:
    return model.next_distribution(context_tokens)
