"""Corpus ingestion, filtering, deterministic splits, probe-set construction."""

from .corpus import (
    GameRecord,
    MAX_PLIES,
    MIN_PLIES,
    filter_and_dedupe,
    game_id_for,
    read_corpus_file,
    write_corpus_file,
)
from .pgn import IngestDiagnostic, ingest_pgn
from .probes import (
    ExhaustedPool,
    PREFIX_MAX,
    PREFIX_MIN,
    ProbeInstance,
    ProbeKind,
    build_probes,
    game_tokens,
    prefix_board,
    prompt_piece_counts,
    prompt_piece_letter,
    read_probe_file,
    write_probe_file,
)
from .splits import (
    DEFAULT_SIZES,
    InsufficientCorpus,
    SPLIT_NAMES,
    SplitSpec,
    make_splits,
    read_manifest,
    select_split,
    write_manifest,
)

__all__ = [
    "GameRecord", "MAX_PLIES", "MIN_PLIES", "filter_and_dedupe", "game_id_for",
    "read_corpus_file", "write_corpus_file",
    "IngestDiagnostic", "ingest_pgn",
    "ExhaustedPool", "PREFIX_MAX", "PREFIX_MIN", "ProbeInstance", "ProbeKind",
    "build_probes", "game_tokens", "prefix_board", "prompt_piece_counts",
    "prompt_piece_letter", "read_probe_file", "write_probe_file",
    "DEFAULT_SIZES", "InsufficientCorpus", "SPLIT_NAMES", "SplitSpec",
    "make_splits", "read_manifest", "select_split", "write_manifest",
]
