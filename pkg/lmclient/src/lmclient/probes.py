"""Probe file parsing: we consume only the fields a predictor needs."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class ProbeRow:
    probe_id: str
    prefix_tokens: tuple[str, ...]
    prompt: str


def read_probe_rows(path: str | Path) -> list[ProbeRow]:
    """Parse the 6-field probe format, keeping id, prefix, and prompt."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise ValueError(f"{path}:{line_no}: expected 6 tab-separated fields")
            probe_id, _kind, prefix, prompt, _exm, _lgm = parts
            rows.append(ProbeRow(probe_id, tuple(prefix.split(" ")), prompt))
    return rows
