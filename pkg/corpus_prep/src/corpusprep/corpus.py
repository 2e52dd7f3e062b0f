"""Annotated-corpus reading and writing.

Two input formats are understood:

* The pipe text format (this package's working format): UTF-8, one sentence
  per line, tokens separated by single spaces. A token is either a bare
  surface form, ``surface|lemma`` for a lemmatized but unannotated word, or
  ``surface|lemma|sense_key`` for a sense-annotated content word. Fields
  contain neither whitespace nor ``|``.
* SemCor-style SGML/XML, where content words appear as
  ``<wf lemma=... lexsn=...>surface</wf>`` inside ``<s>`` sentence elements
  (attribute values may be unquoted, as in the original distribution).
  Reading is one-way; ``to_pipe_format`` re-serializes into the pipe format.

Training text is the lemmatized stream: a token contributes its lemma when
one is annotated, otherwise its surface form.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path


class CorpusFormatError(ValueError):
    """Input corpus violates its documented format."""


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    lemma: str | None = None
    sense_key: str | None = None

    def training_form(self) -> str:
        return self.lemma if self.lemma is not None else self.surface


Sentence = list[AnnotatedToken]


def parse_token(text: str) -> AnnotatedToken:
    if not text:
        raise CorpusFormatError("empty token")
    parts = text.split("|")
    if len(parts) == 1:
        return AnnotatedToken(surface=parts[0])
    if len(parts) == 2:
        return AnnotatedToken(surface=parts[0], lemma=parts[1])
    if len(parts) == 3:
        if not (parts[0] and parts[1] and parts[2]):
            raise CorpusFormatError(f"token with empty field: {text!r}")
        return AnnotatedToken(surface=parts[0], lemma=parts[1], sense_key=parts[2])
    raise CorpusFormatError(f"token has too many fields: {text!r}")


def format_token(token: AnnotatedToken) -> str:
    if token.sense_key is not None:
        return f"{token.surface}|{token.lemma}|{token.sense_key}"
    if token.lemma is not None:
        return f"{token.surface}|{token.lemma}"
    return token.surface


def parse_pipe_corpus(text: str) -> list[Sentence]:
    sentences = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        try:
            sentences.append([parse_token(tok) for tok in line.split(" ") if tok])
        except CorpusFormatError as exc:
            raise CorpusFormatError(f"line {lineno}: {exc}") from None
    return sentences


_WF_RE = re.compile(r"<(wf|punc)([^>]*)>([^<]*)</\1>")
_ATTR_RE = re.compile(r"(\w+)=(\"[^\"]*\"|[^\s>]+)")
_SENT_SPLIT_RE = re.compile(r"</s>")


def _attributes(raw: str) -> dict[str, str]:
    return {
        key: value.strip('"') for key, value in _ATTR_RE.findall(raw)
    }


def parse_semcor_sgml(text: str) -> list[Sentence]:
    """Tolerant reader for SemCor-style markup.

    Only ``wf`` word forms matter; ``punc`` elements are skipped. A token
    is annotated when both ``lemma`` and ``lexsn`` attributes are present;
    its sense key is the standard ``lemma%lexsn`` form.
    """
    sentences: list[Sentence] = []
    for chunk in _SENT_SPLIT_RE.split(text):
        sentence: Sentence = []
        for kind, raw_attrs, surface in _WF_RE.findall(chunk):
            if kind != "wf":
                continue
            surface = surface.strip()
            if not surface:
                continue
            attrs = _attributes(raw_attrs)
            lemma = attrs.get("lemma")
            lexsn = attrs.get("lexsn")
            sense_key = f"{lemma}%{lexsn}" if lemma and lexsn else None
            sentence.append(
                AnnotatedToken(surface=surface, lemma=lemma, sense_key=sense_key)
            )
        if sentence:
            sentences.append(sentence)
    if not sentences:
        raise CorpusFormatError("no <wf> word forms found in SGML corpus")
    return sentences


def load_corpus(path: str | Path) -> list[Sentence]:
    """Read a corpus file, dispatching on content (SGML markup vs pipe text)."""
    text = Path(path).read_text(encoding="utf-8")
    if "<wf" in text:
        return parse_semcor_sgml(text)
    sentences = parse_pipe_corpus(text)
    if not sentences:
        raise CorpusFormatError(f"corpus is empty: {path}")
    return sentences


def to_pipe_format(sentences: list[Sentence]) -> str:
    return "".join(
        " ".join(format_token(tok) for tok in sent) + "\n" for sent in sentences
    )


def training_sentences(sentences: list[Sentence]) -> list[list[str]]:
    return [[tok.training_form() for tok in sent] for sent in sentences]
