"""Reference external predictor for the chessprobe file protocol.

Reads a probe file, runs a small causal language model (or the uniform
stub) over the 77-token vocabulary, and writes one full-score prediction
row per probe.
"""

__version__ = "0.1.0"

from .serve import ClientConfig, serve_predictions
from .vocab import VocabularyMismatch, load_vocabulary

__all__ = ["ClientConfig", "serve_predictions", "VocabularyMismatch", "load_vocabulary"]
