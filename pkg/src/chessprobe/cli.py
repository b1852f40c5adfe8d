"""Command-line surface: ingest -> split -> probes -> eval, plus selfcheck.

Every command is deterministic given its flags; seeds are mandatory for
anything that samples. Exit codes: 0 success, 1 usage error, 2 data error.
Diagnostics go to stderr; file artifacts go to --out.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .chesscore import (
    PieceType,
    apply_move,
    initial_board,
    legal_destinations,
    movable_squares_of_type,
    parse_square,
    perft,
    square_name,
)
from .datagen import (
    ExhaustedPool,
    InsufficientCorpus,
    ProbeKind,
    SplitSpec,
    build_probes,
    filter_and_dedupe,
    ingest_pgn,
    make_splits,
    prompt_piece_counts,
    read_corpus_file,
    read_manifest,
    read_probe_file,
    select_split,
    write_corpus_file,
    write_manifest,
    write_probe_file,
    MAX_PLIES,
    MIN_PLIES,
)
from .evalkit import aggregate, render_report
from .notation import (
    IllegalGame,
    NotationScheme,
    tokenize_game,
    uci_parse,
    vocabulary,
    write_token_file,
)
from .predictors import (
    PredictionFileError,
    random_legal_expected_exm,
    random_legal_predict,
    read_prediction_file,
    score_predictions,
)

_WORKERS_ENV = "CHESSPROBE_WORKERS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chessprobe", description=__doc__)
    parser.add_argument("--version", action="version", version=f"chessprobe {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="parse PGN files into a filtered corpus")
    p.add_argument("pgn", nargs="+", help="PGN input files")
    p.add_argument("--out", required=True, help="corpus file to write")
    p.add_argument("--source-tag", default="", help="source tag stored per game")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("split", help="write a deterministic split manifest")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True, help="manifest file to write")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--splits", default="",
                   help="comma list of name=count overrides, e.g. train-l=200000,dev=15000")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("probes", help="build a probe set with gold answers")
    p.add_argument("--corpus", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True, help="probe file to write")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--n-probes", type=int, default=1000, help="instances per task kind")
    p.add_argument("--prefix-min", type=int, default=51)
    p.add_argument("--prefix-max", type=int, default=100)
    p.add_argument("--pool-split", default="probe-pool")
    p.add_argument("--train-split", default="train-l")
    p.set_defaults(func=cmd_probes)

    p = sub.add_parser("tokens", help="write token files for a split")
    p.add_argument("--corpus", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--split", default="train-l")
    p.add_argument("--scheme", default="uci", help="uci, ap, or rap[:p]")
    p.add_argument("--rap-p", type=float, default=None, help="piece-type probability for rap")
    p.add_argument("--seed", type=int, default=None, help="required for rap schemes")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tokens)

    p = sub.add_parser("eval", help="score a prediction file or the built-in baseline")
    p.add_argument("--probes", required=True)
    p.add_argument("--predictions", help="prediction file from an external predictor")
    p.add_argument("--baseline", choices=["random-legal"],
                   help="score a built-in baseline instead of a prediction file")
    p.add_argument("--seed", type=int, default=None, help="required with --baseline")
    p.add_argument("--mc-runs", type=int, default=1,
                   help="Monte-Carlo scoring passes for the baseline")
    p.add_argument("--out", required=True, help="report file to write")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("selfcheck", help="run the built-in engine and fixture checks")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def cmd_ingest(args) -> int:
    records = []
    dropped_parse = Counter()
    for path in args.pgn:
        diagnostics = []
        with open(path, encoding="utf-8", errors="replace") as fh:
            records.extend(ingest_pgn(fh, source_tag=args.source_tag or Path(path).name,
                                      diagnostics=diagnostics))
        for diag in diagnostics:
            dropped_parse[diag.reason] += 1
    too_short = sum(1 for g in records if len(g.moves) < MIN_PLIES)
    too_long = sum(1 for g in records if len(g.moves) > MAX_PLIES)
    in_band = [g for g in records if MIN_PLIES <= len(g.moves) <= MAX_PLIES]
    kept = filter_and_dedupe(records)
    duplicates = len(in_band) - len(kept)
    write_corpus_file(args.out, kept)
    _info(f"parsed games: {len(records) + sum(dropped_parse.values())}")
    for reason, count in sorted(dropped_parse.items()):
        _info(f"dropped ({reason}): {count}")
    _info(f"dropped (too-short): {too_short}")
    _info(f"dropped (too-long): {too_long}")
    _info(f"dropped (duplicate): {duplicates}")
    _info(f"kept: {len(kept)} -> {args.out}")
    return 0


def _parse_split_sizes(text: str) -> dict[str, int]:
    sizes = {}
    if text:
        for part in text.split(","):
            name, _, value = part.partition("=")
            sizes[name.strip()] = int(value)
    return sizes


def cmd_split(args) -> int:
    games = read_corpus_file(args.corpus)
    spec = SplitSpec(seed=args.seed, sizes=_parse_split_sizes(args.splits))
    splits = make_splits(games, spec)
    write_manifest(args.out, splits)
    for name, members in splits.items():
        _info(f"{name}: {len(members)} games")
    _info(f"manifest -> {args.out}")
    return 0


def cmd_probes(args) -> int:
    games = read_corpus_file(args.corpus)
    manifest = read_manifest(args.manifest)
    pool = select_split(games, manifest, args.pool_split)
    train = select_split(games, manifest, args.train_split)
    workers = int(os.environ.get(_WORKERS_ENV, "1"))
    probes = build_probes(
        pool, train, args.n_probes, args.seed,
        prefix_min=args.prefix_min, prefix_max=args.prefix_max, workers=workers,
    )
    write_probe_file(args.out, probes)
    counts = prompt_piece_counts(probes)
    _info("prompt piece-type counts:")
    _info(f"{'piece':<8}" + "".join(f" {kind.value:>14}" for kind in ProbeKind))
    for letter in ("R", "N", "B", "Q", "K"):
        row = "".join(f" {counts.get(kind, {}).get(letter, 0):>14}" for kind in ProbeKind)
        _info(f"{letter:<8}{row}")
    total_row = "".join(
        f" {sum(counts.get(kind, {}).values()):>14}" for kind in ProbeKind)
    _info(f"{'total':<8}{total_row}")
    _info(f"{len(probes)} probes -> {args.out}")
    return 0


def cmd_tokens(args) -> int:
    if args.scheme == "rap" and args.rap_p is not None:
        scheme = NotationScheme.rap(args.rap_p)
    else:
        scheme = NotationScheme.parse(args.scheme)
        if scheme.kind == "rap" and args.rap_p is not None:
            scheme = NotationScheme.rap(args.rap_p)
    rng = None
    if scheme.kind == "rap":
        if args.seed is None:
            raise ValueError("--seed is required for rap token files")
        rng = random.Random(args.seed)
    games = read_corpus_file(args.corpus)
    manifest = read_manifest(args.manifest)
    members = select_split(games, manifest, args.split)
    count = write_token_file(args.out, (g.moves for g in members), scheme, rng)
    _info(f"{count} games tokenized under {scheme} -> {args.out}")
    return 0


def cmd_eval(args) -> int:
    if bool(args.predictions) == bool(args.baseline):
        raise ValueError("exactly one of --predictions and --baseline is required")
    probes = read_probe_file(args.probes)
    extra = {}
    if args.baseline:
        if args.seed is None:
            raise ValueError("--seed is required with --baseline")
        results = []
        exm_runs = []
        for run in range(args.mc_runs):
            predictions = {p.probe_id: random_legal_predict(p, args.seed + run)
                           for p in probes}
            run_results = score_predictions(probes, predictions)
            if run == 0:
                results = run_results
            hits = [s.exm_hit for s in run_results if s.exm_hit is not None]
            exm_runs.append(sum(hits) / len(hits) if hits else 0.0)
        analytic = random_legal_expected_exm(probes)
        monte_carlo = sum(exm_runs) / len(exm_runs)
        extra["baseline.analytic_exm"] = f"{analytic:.6f}"
        extra["baseline.monte_carlo_exm"] = f"{monte_carlo:.6f}"
        extra["baseline.mc_runs"] = str(args.mc_runs)
        _info(f"random-legal analytic expected ExM: {analytic:.4f}")
        _info(f"random-legal Monte-Carlo ExM ({args.mc_runs} run(s)): {monte_carlo:.4f}")
    else:
        predictions = read_prediction_file(args.predictions)
        results = score_predictions(probes, predictions)
    report = aggregate(results)
    report.extra_metrics.update(extra)
    Path(args.out).write_text(render_report(report), encoding="utf-8")
    _info(f"report -> {args.out}")
    return 0


_TASKS_PREFIX = "e2e4 e7e5 g1f3 b8c6 d2d4 h7h6"
_TASKS_FIXTURE = {
    "end-actual f1": {"e2", "d3", "c4", "b5", "a6"},
    "end-other f3": {"d2", "g1", "h4", "g5", "e5"},
    "start-actual B": {"f1", "c1"},
    "start-other N": {"f3", "b1"},
}


def cmd_selfcheck(args) -> int:
    failures = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail and not ok else ""))
        if not ok:
            failures += 1

    for depth, want in ((1, 20), (2, 400), (3, 8902)):
        got = perft(initial_board(), depth)
        check(f"perft({depth}) == {want}", got == want, f"got {got}")

    board = initial_board()
    for token in _TASKS_PREFIX.split():
        board = apply_move(board, uci_parse(token))

    got = {square_name(s) for s in legal_destinations(board, parse_square("f1"))}
    check("gold set end-actual(f1)", got == _TASKS_FIXTURE["end-actual f1"], str(sorted(got)))
    got = {square_name(s) for s in legal_destinations(board, parse_square("f3"))}
    check("gold set end-other(f3)", got == _TASKS_FIXTURE["end-other f3"], str(sorted(got)))
    got = {square_name(s) for s in movable_squares_of_type(board, PieceType.BISHOP)}
    check("gold set start-actual(B)", got == _TASKS_FIXTURE["start-actual B"], str(sorted(got)))
    got = {square_name(s) for s in movable_squares_of_type(board, PieceType.KNIGHT)}
    check("gold set start-other(N)", got == _TASKS_FIXTURE["start-other N"], str(sorted(got)))

    sample = [uci_parse(u) for u in "e2e4 e7e5 g1f3".split()]
    uci_tokens = tuple(tokenize_game(sample, NotationScheme.uci()))
    check("tokenization uci row", uci_tokens == ("e2", "e4", "e7", "e5", "g1", "f3"))
    ap_tokens = tuple(tokenize_game(sample, NotationScheme.ap()))
    check("tokenization ap row", ap_tokens == ("P", "e2", "e4", "P", "e7", "e5", "N", "g1", "f3"))
    rap1 = tuple(tokenize_game(sample, NotationScheme.rap(1.0), random.Random(0)))
    check("tokenization rap(1) row", rap1 == ap_tokens)
    check("vocabulary has 77 tokens", len(vocabulary()) == 77)

    print("selfcheck:", "all checks passed" if failures == 0 else f"{failures} check(s) failed")
    return 0 if failures == 0 else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileNotFoundError, ValueError, KeyError, IllegalGame,
            PredictionFileError, InsufficientCorpus, ExhaustedPool) as exc:
        print(f"chessprobe: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
