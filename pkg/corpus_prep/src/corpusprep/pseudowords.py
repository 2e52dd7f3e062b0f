"""Pseudoword substitution: split an ambiguous lemma into one artificial
token per sense, yielding words with a known ground-truth count of 1.

A rule maps a lemma's sense keys, in order, to replacement tokens
``lemma$1``, ``lemma$2``, ...  Substitution rewrites each annotated
occurrence of a ruled sense; every other token is carried through
byte-for-byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import (
    AnnotatedToken,
    CorpusFormatError,
    format_token,
    parse_pipe_corpus,
    parse_token,
)
from .ground_truth import sense_inventory


@dataclass(frozen=True)
class PseudowordRule:
    lemma: str
    sense_keys: list[str]
    replacements: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.sense_keys:
            raise ValueError(f"rule for {self.lemma!r} lists no sense keys")
        if not self.replacements:
            object.__setattr__(
                self,
                "replacements",
                [f"{self.lemma}${n}" for n in range(1, len(self.sense_keys) + 1)],
            )
        if len(self.replacements) != len(self.sense_keys):
            raise ValueError(
                f"rule for {self.lemma!r}: {len(self.replacements)} replacements "
                f"for {len(self.sense_keys)} sense keys"
            )

    def replacement_for(self, sense_key: str) -> str | None:
        try:
            return self.replacements[self.sense_keys.index(sense_key)]
        except ValueError:
            return None


def load_rules(path: str | Path) -> list[PseudowordRule]:
    """Rules file: JSON list of {"lemma": ..., "sense_keys": [...]}."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ValueError("rules file must hold a JSON list")
    return [PseudowordRule(entry["lemma"], list(entry["sense_keys"])) for entry in raw]


def pseudoword_substitute(
    corpus_text: str, rules: list[PseudowordRule]
) -> tuple[str, dict[str, int]]:
    """Rewrite ruled sense occurrences in a pipe-format corpus.

    Returns the transformed text and a per-replacement substitution count.
    Unruled tokens (including other senses of a ruled lemma) pass through
    byte-identical; token count never changes.  Raises if a rule references
    a sense key absent from the corpus or a replacement token that already
    exists in the vocabulary.
    """
    sentences = parse_pipe_corpus(corpus_text)
    attested = sense_inventory(sentences)
    vocabulary = {
        form
        for sent in sentences
        for tok in sent
        for form in (tok.surface, tok.lemma)
        if form
    }
    by_lemma: dict[str, PseudowordRule] = {}
    for rule in rules:
        if rule.lemma in by_lemma:
            raise ValueError(f"duplicate rule for lemma {rule.lemma!r}")
        by_lemma[rule.lemma] = rule
        for key in rule.sense_keys:
            if key not in attested.get(rule.lemma, set()):
                raise ValueError(
                    f"rule for {rule.lemma!r} references unknown sense key {key!r}"
                )
        for replacement in rule.replacements:
            if replacement in vocabulary:
                raise ValueError(
                    f"replacement {replacement!r} already exists in the corpus"
                )

    counts = {
        replacement: 0 for rule in rules for replacement in rule.replacements
    }

    def rewrite(raw: str) -> str:
        if not raw or "|" not in raw:
            return raw
        token = parse_token(raw)
        if token.sense_key is None or token.lemma not in by_lemma:
            return raw
        replacement = by_lemma[token.lemma].replacement_for(token.sense_key)
        if replacement is None:
            return raw
        counts[replacement] += 1
        return format_token(
            AnnotatedToken(
                surface=replacement, lemma=replacement, sense_key=token.sense_key
            )
        )

    lines_out = []
    for line in corpus_text.split("\n"):
        lines_out.append(" ".join(rewrite(tok) for tok in line.split(" ")))
    return "\n".join(lines_out), counts


def substitute_file(
    corpus_path: str | Path, rules: list[PseudowordRule], output_path: str | Path
) -> dict[str, int]:
    text = Path(corpus_path).read_text(encoding="utf-8")
    if "<wf" in text:
        raise CorpusFormatError(
            "pseudoword substitution operates on the pipe format; "
            "run 'corpusprep convert' on SGML corpora first"
        )
    transformed, counts = pseudoword_substitute(text, rules)
    Path(output_path).write_text(transformed, encoding="utf-8")
    return counts
