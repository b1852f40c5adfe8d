"""Scoring, aggregation, error taxonomy, and canonical perplexity."""

from .aggregate import (
    EvalReport,
    KindMetrics,
    aggregate,
    parse_report_metrics,
    render_report,
    report_metrics,
)
from .perplexity import LengthMismatch, canonical_perplexity, uci_token_count
from .scoring import Prediction, ProbeScore, ranked_from_scores, score_probe
from .taxonomy import (
    ErrorCategory,
    NotIllegal,
    PseudoLegalSubcat,
    classify_illegal_end,
    force_execute,
    subclassify_pseudo_legal,
)

__all__ = [
    "EvalReport", "KindMetrics", "aggregate", "parse_report_metrics",
    "render_report", "report_metrics",
    "LengthMismatch", "canonical_perplexity", "uci_token_count",
    "Prediction", "ProbeScore", "ranked_from_scores", "score_probe",
    "ErrorCategory", "NotIllegal", "PseudoLegalSubcat",
    "classify_illegal_end", "force_execute", "subclassify_pseudo_legal",
]
