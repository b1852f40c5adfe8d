"""chessprobe: a chess board-state probing benchmark toolkit.

Builds tokenized training corpora from real games, constructs probing
prompts with exact gold answer sets, and scores any next-token predictor
with exact-move / legal-move accuracies and a fine-grained illegal-move
error taxonomy.
"""

__version__ = "0.1.0"
