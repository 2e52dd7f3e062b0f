"""Sense-annotated corpus preparation for the sense-induction pipeline."""

from .corpus import (
    AnnotatedToken,
    CorpusFormatError,
    load_corpus,
    parse_pipe_corpus,
    parse_semcor_sgml,
    to_pipe_format,
    training_sentences,
)
from .ground_truth import extract_ground_truth, sense_counts, sense_inventory
from .pseudowords import PseudowordRule, load_rules, pseudoword_substitute, substitute_file
from .training import sgns_trainer, train_embeddings, write_embedding_file

__version__ = "0.1.0"

__all__ = [
    "AnnotatedToken",
    "CorpusFormatError",
    "PseudowordRule",
    "extract_ground_truth",
    "load_corpus",
    "load_rules",
    "parse_pipe_corpus",
    "parse_semcor_sgml",
    "pseudoword_substitute",
    "sense_counts",
    "sense_inventory",
    "sgns_trainer",
    "substitute_file",
    "to_pipe_format",
    "train_embeddings",
    "training_sentences",
    "write_embedding_file",
]
