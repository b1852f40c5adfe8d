"""A deliberately small causal transformer over the 77-token vocabulary.

Enough model to exercise the checkpoint path end to end: token + position
embeddings, a couple of pre-norm attention blocks with a causal mask, and a
tied-free output head. Checkpoints bundle the config with the state dict.
"""

from __future__ import annotations

import torch
import torch.nn as nn


class _Block(nn.Module):
    def __init__(self, d_model: int, n_heads: int):
        super().__init__()
        self.norm1 = nn.LayerNorm(d_model)
        self.attn = nn.MultiheadAttention(d_model, n_heads, batch_first=True)
        self.norm2 = nn.LayerNorm(d_model)
        self.mlp = nn.Sequential(
            nn.Linear(d_model, 4 * d_model),
            nn.GELU(),
            nn.Linear(4 * d_model, d_model),
        )

    def forward(self, x: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
        h = self.norm1(x)
        attn, _ = self.attn(h, h, h, attn_mask=mask, need_weights=False)
        x = x + attn
        return x + self.mlp(self.norm2(x))


class TinyCausalLM(nn.Module):
    def __init__(self, vocab_size: int = 77, d_model: int = 64,
                 n_heads: int = 4, n_layers: int = 2, max_len: int = 1024):
        super().__init__()
        self.config = dict(vocab_size=vocab_size, d_model=d_model,
                           n_heads=n_heads, n_layers=n_layers, max_len=max_len)
        self.tok = nn.Embedding(vocab_size, d_model)
        self.pos = nn.Embedding(max_len, d_model)
        self.blocks = nn.ModuleList(_Block(d_model, n_heads) for _ in range(n_layers))
        self.norm = nn.LayerNorm(d_model)
        self.head = nn.Linear(d_model, vocab_size, bias=False)

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        n = ids.shape[1]
        if n > self.config["max_len"]:
            raise ValueError(f"context of {n} exceeds max_len {self.config['max_len']}")
        x = self.tok(ids) + self.pos(torch.arange(n, device=ids.device))[None]
        mask = torch.triu(torch.full((n, n), float("-inf"), device=ids.device), diagonal=1)
        for block in self.blocks:
            x = block(x, mask)
        return self.head(self.norm(x))

    def save(self, path: str) -> None:
        torch.save({"config": self.config, "state": self.state_dict()}, path)

    @classmethod
    def load(cls, path: str) -> "TinyCausalLM":
        bundle = torch.load(path, map_location="cpu", weights_only=True)
        model = cls(**bundle["config"])
        model.load_state_dict(bundle["state"])
        return model
