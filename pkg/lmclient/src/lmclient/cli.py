"""Command line: lmclient --vocab v.txt --probes p.txt --out pred.txt [...]"""

from __future__ import annotations

import argparse
import sys

from .serve import ClientConfig, serve_predictions
from .vocab import VocabularyMismatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lmclient", description=__doc__)
    parser.add_argument("--vocab", required=True, help="toolkit vocabulary file")
    parser.add_argument("--probes", required=True, help="probe file to answer")
    parser.add_argument("--out", required=True, help="prediction file to write")
    parser.add_argument("--model", default="stub",
                        help="'stub' or a TinyCausalLM checkpoint path")
    parser.add_argument("--seed", type=int, default=0, help="stub tie-break seed")
    parser.add_argument("--mask-piece-types", action=argparse.BooleanOptionalAction,
                        default=True, help="zero out piece-type tokens (default on)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = ClientConfig(
        vocab_path=args.vocab,
        probe_path=args.probes,
        out_path=args.out,
        model=args.model,
        mask_piece_types=args.mask_piece_types,
        seed=args.seed,
    )
    try:
        rows = serve_predictions(cfg)
    except (VocabularyMismatch, FileNotFoundError, ValueError) as exc:
        print(f"lmclient: error: {exc}", file=sys.stderr)
        return 2
    print(f"{rows} prediction rows -> {cfg.out_path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
