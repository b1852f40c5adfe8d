"""Deterministic corpus splits and the split manifest format.

A seeded shuffle partitions the corpus into train/dev/test/probe-pool, with
the small and medium training sets nested inside the large one. The manifest
lists `split<TAB>game_id` lines and is byte-reproducible from (corpus, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .corpus import GameRecord

SPLIT_NAMES = ("train-s", "train-m", "train-l", "dev", "test", "probe-pool")

DEFAULT_SIZES: Mapping[str, int] = {
    "train-s": 15_000,
    "train-m": 50_000,
    "train-l": 200_000,
    "dev": 15_000,
    "test": 15_000,
    "probe-pool": 50_000,
}


class InsufficientCorpus(Exception):
    """The corpus has fewer games than the requested split sizes."""


@dataclass(frozen=True)
class SplitSpec:
    seed: int
    sizes: Mapping[str, int] = field(default_factory=lambda: dict(DEFAULT_SIZES))

    def __post_init__(self) -> None:
        unknown = set(self.sizes) - set(SPLIT_NAMES)
        if unknown:
            raise ValueError(f"unknown split names: {sorted(unknown)}")
        missing = set(SPLIT_NAMES) - set(self.sizes)
        if missing:
            merged = dict(DEFAULT_SIZES)
            merged.update(self.sizes)
            object.__setattr__(self, "sizes", merged)
        s, m, l = (self.sizes[k] for k in ("train-s", "train-m", "train-l"))
        if not s <= m <= l:
            raise ValueError("training sizes must nest: train-s <= train-m <= train-l")


def make_splits(games: Sequence[GameRecord], spec: SplitSpec) -> dict[str, list[GameRecord]]:
    """Partition games per `spec`; train-s ⊆ train-m ⊆ train-l by construction."""
    sizes = spec.sizes
    need = sizes["train-l"] + sizes["dev"] + sizes["test"] + sizes["probe-pool"]
    if len(games) < need:
        raise InsufficientCorpus(f"need {need} games, corpus has {len(games)}")
    by_id = sorted(games, key=lambda g: g.id)
    random.Random(spec.seed).shuffle(by_id)
    train_l = by_id[: sizes["train-l"]]
    cursor = sizes["train-l"]
    splits = {
        "train-s": train_l[: sizes["train-s"]],
        "train-m": train_l[: sizes["train-m"]],
        "train-l": train_l,
    }
    for name in ("dev", "test", "probe-pool"):
        splits[name] = by_id[cursor: cursor + sizes[name]]
        cursor += sizes[name]
    return splits


def write_manifest(path: str | Path, splits: Mapping[str, Sequence[GameRecord]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for name in SPLIT_NAMES:
            for gid in sorted(g.id for g in splits.get(name, ())):
                fh.write(f"{name}\t{gid}\n")


def read_manifest(path: str | Path) -> dict[str, list[str]]:
    splits: dict[str, list[str]] = {name: [] for name in SPLIT_NAMES}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                name, gid = line.split("\t")
            except ValueError:
                raise ValueError(f"{path}:{line_no}: expected 2 tab-separated fields") from None
            if name not in splits:
                raise ValueError(f"{path}:{line_no}: unknown split {name!r}")
            splits[name].append(gid)
    return splits


def select_split(games: Sequence[GameRecord], manifest: Mapping[str, Sequence[str]],
                 name: str) -> list[GameRecord]:
    """Resolve a manifest split back to game records, erroring on missing ids."""
    by_id = {g.id: g for g in games}
    out = []
    for gid in manifest[name]:
        if gid not in by_id:
            raise ValueError(f"manifest id {gid} not present in corpus")
        out.append(by_id[gid])
    return out
