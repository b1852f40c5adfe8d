"""Move notation: UCI/SAN text, the 77-token vocabulary, and tokenization."""

from .san import AmbiguousSan, NoLegalMatch, san_parse
from .tokenizer import (
    IllegalGame,
    MalformedSequence,
    NotationScheme,
    TokenSequence,
    detokenize,
    read_token_file,
    tokenize_game,
    write_token_file,
)
from .uci import MalformedUci, uci_parse, uci_print
from .vocab import (
    BOS,
    EOS,
    PAD,
    PIECE_TYPE_TOKENS,
    PROMOTION_TOKENS,
    SPECIAL_TOKENS,
    SQUARE_TOKENS,
    is_piece_type_token,
    is_promotion_token,
    is_square_token,
    read_vocabulary_file,
    token_index,
    vocabulary,
    vocabulary_size,
    write_vocabulary_file,
)

__all__ = [
    "AmbiguousSan", "NoLegalMatch", "san_parse",
    "IllegalGame", "MalformedSequence", "NotationScheme", "TokenSequence",
    "detokenize", "read_token_file", "tokenize_game", "write_token_file",
    "MalformedUci", "uci_parse", "uci_print",
    "BOS", "EOS", "PAD",
    "PIECE_TYPE_TOKENS", "PROMOTION_TOKENS", "SPECIAL_TOKENS", "SQUARE_TOKENS",
    "is_piece_type_token", "is_promotion_token", "is_square_token",
    "read_vocabulary_file", "token_index", "vocabulary", "vocabulary_size",
    "write_vocabulary_file",
]
