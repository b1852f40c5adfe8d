"""Built-in baselines and the external-predictor adapter."""

from .external import (
    DuplicateProbe,
    MalformedPrediction,
    MissingProbe,
    PredictionFileError,
    UnknownProbe,
    UnknownToken,
    read_prediction_file,
    run_external,
    score_predictions,
    write_prediction_file,
)
from .ngram import NGramModel, ngram_next_distribution
from .random_legal import (
    random_legal_exm_variance,
    random_legal_expected_exm,
    random_legal_predict,
)

__all__ = [
    "DuplicateProbe", "MalformedPrediction", "MissingProbe",
    "PredictionFileError", "UnknownProbe", "UnknownToken",
    "read_prediction_file", "run_external", "score_predictions",
    "write_prediction_file",
    "NGramModel", "ngram_next_distribution",
    "random_legal_exm_variance", "random_legal_expected_exm", "random_legal_predict",
]
