"""Prediction-file exchange with external predictors, and batch scoring.

A prediction file holds one record per line: the probe id, a tab, then
either ranked tokens (space-separated, best first) or exactly 77 scores in
vocabulary order. Validation errors name the offending line.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

from ..datagen import ProbeInstance, prefix_board, read_probe_file
from ..evalkit import EvalReport, Prediction, aggregate, ranked_from_scores, score_probe
from ..notation import token_index, vocabulary_size


class PredictionFileError(Exception):
    def __init__(self, message: str, line_no: int = 0):
        super().__init__(f"line {line_no}: {message}" if line_no else message)
        self.line_no = line_no


class MissingProbe(PredictionFileError):
    pass


class DuplicateProbe(PredictionFileError):
    pass


class UnknownProbe(PredictionFileError):
    pass


class UnknownToken(PredictionFileError):
    pass


class MalformedPrediction(PredictionFileError):
    pass


def write_prediction_file(path: str | Path, predictions: Sequence[Prediction]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p in predictions:
            if p.scores is not None:
                fh.write(p.probe_id + "\t" + " ".join(f"{s:.9g}" for s in p.scores) + "\n")
            else:
                fh.write(p.probe_id + "\t" + " ".join(p.ranked_tokens) + "\n")


def read_prediction_file(path: str | Path) -> dict[str, Prediction]:
    """Parse and validate a prediction file; raises on the first bad line."""
    predictions: dict[str, Prediction] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                probe_id, payload = line.split("\t", 1)
            except ValueError:
                raise MalformedPrediction("expected '<probe id>\\t<payload>'", line_no) from None
            if probe_id in predictions:
                raise DuplicateProbe(f"probe {probe_id} appears twice", line_no)
            fields = payload.split(" ")
            prediction = _parse_payload(probe_id, fields, line_no)
            predictions[probe_id] = prediction
    return predictions


def _parse_payload(probe_id: str, fields: list[str], line_no: int) -> Prediction:
    if len(fields) == vocabulary_size() and _all_floats(fields):
        scores = tuple(float(f) for f in fields)
        if any(s != s or s in (float("inf"), float("-inf")) for s in scores):
            raise MalformedPrediction("scores must be finite", line_no)
        return Prediction(probe_id, ranked_from_scores(scores), scores)
    for token in fields:
        try:
            token_index(token)
        except KeyError:
            raise UnknownToken(f"token {token!r} not in vocabulary", line_no) from None
    if len(set(fields)) != len(fields):
        raise MalformedPrediction("duplicate tokens in ranking", line_no)
    try:
        return Prediction(probe_id, tuple(fields))
    except ValueError as exc:
        raise MalformedPrediction(str(exc), line_no) from None


def _all_floats(fields: Sequence[str]) -> bool:
    try:
        for f in fields:
            float(f)
    except ValueError:
        return False
    return True


def score_predictions(probes: Sequence[ProbeInstance],
                      predictions: Mapping[str, Prediction]) -> list:
    """Score every probe, replaying each shared prefix once."""
    for probe in probes:
        if probe.probe_id not in predictions:
            raise MissingProbe(f"no prediction for probe {probe.probe_id}")
    known = {p.probe_id for p in probes}
    for probe_id in predictions:
        if probe_id not in known:
            raise UnknownProbe(f"prediction for unknown probe {probe_id}")

    boards: dict[tuple[str, int], object] = {}
    results = []
    for probe in probes:
        key = (probe.game_id, probe.prefix_len)
        if key not in boards:
            boards[key] = prefix_board(probe)
        results.append(score_probe(probe, predictions[probe.probe_id], boards[key]))
    return results


def run_external(probe_path: str | Path, prediction_path: str | Path) -> EvalReport:
    """Score a prediction file against a probe file."""
    probes = read_probe_file(probe_path)
    predictions = read_prediction_file(prediction_path)
    return aggregate(score_predictions(probes, predictions))
