"""Aggregation of per-probe scores into the evaluation report.

The report mirrors the benchmark's result tables: per-kind accuracies and
R-Precision, per-piece-type breakdowns, error-category counts for the
ending-square kinds, pseudo-legal quadrant counts, path-obstruction counts
by piece type, and king-distance means for path-obstruction errors next to
legal predictions. A machine-readable key=value section follows the tables.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..datagen import ProbeKind
from .scoring import ProbeScore
from .taxonomy import ErrorCategory, PseudoLegalSubcat

_ERROR_CATEGORIES = (
    ErrorCategory.UNREACHABLE,
    ErrorCategory.SYNTAX,
    ErrorCategory.PATH_OBSTRUCTION,
    ErrorCategory.PSEUDO_LEGAL,
)
_PIECE_ROWS = ("R", "N", "B", "Q", "K")


@dataclass(frozen=True)
class KindMetrics:
    n: int
    exm_acc: Optional[float]
    lgm_acc: float
    r_precision: float


@dataclass
class EvalReport:
    kinds: dict[str, KindMetrics]
    per_piece: dict[str, dict[str, KindMetrics]]
    error_counts: dict[str, dict[str, int]]
    non_square_counts: dict[str, int]
    pseudo_subcats: dict[str, dict[str, tuple[int, int]]]
    path_obstruction: dict[str, dict[str, tuple[int, int]]]
    king_distance_means: dict[str, dict[str, tuple[Optional[float], Optional[float]]]]
    n_ranks_truncated: int
    perplexity: Optional[float] = None
    perplexity_renormalized: Optional[bool] = None
    extra_metrics: dict[str, str] = field(default_factory=dict)


def _mean(values: Sequence[float]) -> Optional[float]:
    return sum(values) / len(values) if values else None


def _metrics(scores: Sequence[ProbeScore]) -> KindMetrics:
    exm = [s.exm_hit for s in scores if s.exm_hit is not None]
    return KindMetrics(
        n=len(scores),
        exm_acc=_mean(exm),
        lgm_acc=_mean([s.lgm_hit for s in scores]),
        r_precision=_mean([s.r_precision for s in scores]),
    )


def aggregate(results: Iterable[ProbeScore], perplexity: Optional[float] = None,
              perplexity_renormalized: Optional[bool] = None) -> EvalReport:
    """Fold per-probe scores into an EvalReport; raises on an empty input."""
    results = list(results)
    if not results:
        raise ValueError("cannot aggregate an empty result set")

    by_kind: dict[ProbeKind, list[ProbeScore]] = defaultdict(list)
    for s in results:
        by_kind[s.kind].append(s)

    kinds = {}
    per_piece: dict[str, dict[str, KindMetrics]] = {}
    error_counts: dict[str, dict[str, int]] = {}
    non_square_counts: dict[str, int] = {}
    pseudo_subcats: dict[str, dict[str, tuple[int, int]]] = {}
    path_obstruction: dict[str, dict[str, tuple[int, int]]] = {}
    kd_means: dict[str, dict[str, tuple[Optional[float], Optional[float]]]] = {}

    for kind in ProbeKind:
        scores = by_kind.get(kind)
        if not scores:
            continue
        key = kind.value
        kinds[key] = _metrics(scores)
        per_piece[key] = {
            letter: _metrics([s for s in scores if s.prompt_piece == letter])
            for letter in sorted({s.prompt_piece for s in scores})
        }
        if not kind.is_end:
            continue

        error_counts[key] = {
            cat.value: sum(1 for s in scores if s.category == cat)
            for cat in _ERROR_CATEGORIES
        }
        non_square_counts[key] = sum(1 for s in scores if s.non_square_top1)
        misses = sum(1 for s in scores if not s.lgm_hit)
        assert sum(error_counts[key].values()) + non_square_counts[key] == misses

        quadrants = {}
        for subcat in PseudoLegalSubcat:
            in_quadrant = [
                s for s in scores
                if PseudoLegalSubcat.from_flags(s.check_before, s.prompt_is_king) == subcat
            ]
            errors = sum(1 for s in in_quadrant if s.category == ErrorCategory.PSEUDO_LEGAL)
            total = sum(
                1 for s in in_quadrant
                if s.category in (ErrorCategory.LEGAL, ErrorCategory.PSEUDO_LEGAL)
            )
            quadrants[subcat.value] = (errors, total)
        pseudo_subcats[key] = quadrants

        obstruction = {}
        for letter in _PIECE_ROWS:
            of_piece = [s for s in scores if s.prompt_piece == letter]
            errors = sum(1 for s in of_piece if s.category == ErrorCategory.PATH_OBSTRUCTION)
            total = sum(
                1 for s in of_piece
                if s.category in (ErrorCategory.LEGAL, ErrorCategory.PATH_OBSTRUCTION)
            )
            obstruction[letter] = (errors, total)
        path_obstruction[key] = obstruction

        distances = {}
        groups = [("ALL", scores)] + [
            (letter, [s for s in scores if s.prompt_piece == letter])
            for letter in _PIECE_ROWS
        ]
        for label, group in groups:
            legal = [s.king_dist_top1 for s in group
                     if s.category == ErrorCategory.LEGAL and s.king_dist_top1 is not None]
            blocked = [s.king_dist_top1 for s in group
                       if s.category == ErrorCategory.PATH_OBSTRUCTION
                       and s.king_dist_top1 is not None]
            distances[label] = (_mean(legal), _mean(blocked))
        kd_means[key] = distances

    return EvalReport(
        kinds=kinds,
        per_piece=per_piece,
        error_counts=error_counts,
        non_square_counts=non_square_counts,
        pseudo_subcats=pseudo_subcats,
        path_obstruction=path_obstruction,
        king_distance_means=kd_means,
        n_ranks_truncated=sum(1 for s in results if s.ranks_truncated),
        perplexity=perplexity,
        perplexity_renormalized=perplexity_renormalized,
    )


def _fmt(value: Optional[float], digits: int = 4) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def render_report(report: EvalReport) -> str:
    """Human tables plus the [metrics] key=value section."""
    lines: list[str] = []
    lines.append("== Probing accuracies ==")
    lines.append(f"{'kind':<14} {'n':>6} {'LgM-Acc':>9} {'LgM-RPrec':>10} {'ExM-Acc':>9}")
    for key, m in report.kinds.items():
        lines.append(
            f"{key:<14} {m.n:>6} {_fmt(m.lgm_acc):>9} {_fmt(m.r_precision):>10} "
            f"{_fmt(m.exm_acc):>9}")

    lines.append("")
    lines.append("== Per piece type ==")
    lines.append(f"{'kind':<14} {'piece':<6} {'n':>6} {'LgM-Acc':>9} {'LgM-RPrec':>10} {'ExM-Acc':>9}")
    for key, pieces in report.per_piece.items():
        for letter, m in pieces.items():
            lines.append(
                f"{key:<14} {letter:<6} {m.n:>6} {_fmt(m.lgm_acc):>9} "
                f"{_fmt(m.r_precision):>10} {_fmt(m.exm_acc):>9}")

    if report.error_counts:
        lines.append("")
        lines.append("== Ending-square error counts ==")
        kinds = list(report.error_counts)
        lines.append(f"{'category':<18}" + "".join(f" {k:>12}" for k in kinds))
        for cat in _ERROR_CATEGORIES:
            lines.append(f"{cat.value:<18}" + "".join(
                f" {report.error_counts[k][cat.value]:>12}" for k in kinds))
        lines.append(f"{'non-square-top1':<18}" + "".join(
            f" {report.non_square_counts[k]:>12}" for k in kinds))

        lines.append("")
        lines.append("== Pseudo-legal quadrants (errors/total) ==")
        lines.append(f"{'quadrant':<16}" + "".join(f" {k:>14}" for k in kinds))
        for subcat in PseudoLegalSubcat:
            cells = []
            for k in kinds:
                errors, total = report.pseudo_subcats[k][subcat.value]
                cells.append(f" {f'{errors}/{total}':>14}")
            lines.append(f"{subcat.value:<16}" + "".join(cells))

        lines.append("")
        lines.append("== Path obstruction by piece type (errors/total) ==")
        lines.append(f"{'piece':<16}" + "".join(f" {k:>14}" for k in kinds))
        for letter in _PIECE_ROWS:
            cells = []
            for k in kinds:
                errors, total = report.path_obstruction[k][letter]
                cells.append(f" {f'{errors}/{total}':>14}")
            lines.append(f"{letter:<16}" + "".join(cells))

        lines.append("")
        lines.append("== Mean king-distance of top-1 (legal | path-obstruction) ==")
        lines.append(f"{'piece':<16}" + "".join(f" {k:>18}" for k in kinds))
        for label in ("ALL",) + _PIECE_ROWS:
            cells = []
            for k in kinds:
                legal, blocked = report.king_distance_means[k][label]
                cells.append(f" {f'{_fmt(legal, 2)} | {_fmt(blocked, 2)}':>18}")
            lines.append(f"{label:<16}" + "".join(cells))

    if report.perplexity is not None:
        lines.append("")
        renorm = "yes" if report.perplexity_renormalized else "no"
        lines.append(f"Canonical perplexity: {report.perplexity:.4f} "
                     f"(piece-type mass renormalized: {renorm})")

    lines.append("")
    lines.append("[metrics]")
    for key, value in report_metrics(report).items():
        lines.append(f"{key}={value}")
    return "\n".join(lines) + "\n"


def report_metrics(report: EvalReport) -> dict[str, str]:
    """Flat machine-readable mapping of every reported number."""
    out: dict[str, str] = {}
    for key, m in report.kinds.items():
        out[f"{key}.n"] = str(m.n)
        out[f"{key}.lgm_acc"] = _fmt(m.lgm_acc, 6)
        out[f"{key}.r_precision"] = _fmt(m.r_precision, 6)
        if m.exm_acc is not None:
            out[f"{key}.exm_acc"] = _fmt(m.exm_acc, 6)
    for key, pieces in report.per_piece.items():
        for letter, m in pieces.items():
            out[f"{key}.piece.{letter}.n"] = str(m.n)
            out[f"{key}.piece.{letter}.lgm_acc"] = _fmt(m.lgm_acc, 6)
    for key, counts in report.error_counts.items():
        for cat, count in counts.items():
            out[f"{key}.errors.{cat}"] = str(count)
        out[f"{key}.errors.non-square"] = str(report.non_square_counts[key])
        for subcat, (errors, total) in report.pseudo_subcats[key].items():
            out[f"{key}.pseudo.{subcat}"] = f"{errors}/{total}"
        for letter, (errors, total) in report.path_obstruction[key].items():
            out[f"{key}.path-obstruction.{letter}"] = f"{errors}/{total}"
    if report.perplexity is not None:
        out["perplexity"] = f"{report.perplexity:.6f}"
        out["perplexity.renormalized"] = str(bool(report.perplexity_renormalized)).lower()
    out["ranks_truncated"] = str(report.n_ranks_truncated)
    out.update(report.extra_metrics)
    return out


def parse_report_metrics(text: str) -> dict[str, str]:
    """Read back the [metrics] section of a rendered report."""
    metrics = {}
    in_section = False
    for line in text.splitlines():
        if line.strip() == "[metrics]":
            in_section = True
            continue
        if in_section and "=" in line:
            key, value = line.split("=", 1)
            metrics[key] = value
    return metrics
