"""The Random Legal baseline: a uniform draw over the gold legal answers.

The ranking puts a seeded shuffle of the gold set first and the rest of the
vocabulary after it in fixed order, so the top-1 is a uniform legal choice
and R-Precision is 1 by construction. The analytic expected exact-move
accuracy of this baseline is the mean of 1/R over the *-Actual probes.
"""

from __future__ import annotations

import hashlib
import random

from ..datagen import ProbeInstance
from ..evalkit import Prediction
from ..notation import vocabulary


def _probe_rng(seed: int, probe_id: str) -> random.Random:
    digest = hashlib.blake2b(f"{seed}:{probe_id}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def random_legal_predict(probe: ProbeInstance, seed: int) -> Prediction:
    rng = _probe_rng(seed, probe.probe_id)
    gold = sorted(probe.lgm_gold)
    rng.shuffle(gold)
    rest = [t for t in vocabulary() if t not in probe.lgm_gold]
    return Prediction(probe.probe_id, tuple(gold) + tuple(rest))


def random_legal_expected_exm(probes) -> float:
    """Analytic expectation of exact-move accuracy for the baseline."""
    actual = [p for p in probes if p.kind.is_actual]
    if not actual:
        raise ValueError("no *-Actual probes supplied")
    return sum(1.0 / len(p.lgm_gold) for p in actual) / len(actual)


def random_legal_exm_variance(probes) -> float:
    """Variance of the baseline's empirical exact-move accuracy over one run
    (sum of per-probe Bernoulli variances divided by n squared)."""
    actual = [p for p in probes if p.kind.is_actual]
    if not actual:
        raise ValueError("no *-Actual probes supplied")
    n = len(actual)
    return sum((1.0 / len(p.lgm_gold)) * (1.0 - 1.0 / len(p.lgm_gold)) for p in actual) / n**2
