"""Batch CLI for corpus preparation.

Exit statuses: 0 success, 2 usage error, 1 any data or I/O failure
(message on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusFormatError, load_corpus, to_pipe_format
from .ground_truth import extract_ground_truth
from .pseudowords import load_rules, substitute_file
from .training import train_embeddings


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpusprep",
        description="Prepare sense-annotated corpora: ground-truth sense "
        "counts, trained embeddings, pseudoword variants.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ground-truth", help="write lemma<TAB>sense-count lines")
    p.add_argument("corpus")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_ground_truth)

    p = sub.add_parser("train", help="train skip-gram embeddings, write text format")
    p.add_argument("corpus")
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--window", type=_positive_int, default=5)
    p.add_argument("--epochs", type=_positive_int, default=5)
    p.add_argument("--negative", type=_positive_int, default=5)
    p.add_argument("--min-count", type=_positive_int, default=1)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser(
        "pseudoword",
        help="replace ruled senses with lemma$N tokens (pipe-format corpora)",
    )
    p.add_argument("corpus")
    p.add_argument("--rules", required=True, help="JSON list of {lemma, sense_keys}")
    p.add_argument("--output", required=True)
    p.add_argument("--counts-output", help="write substitution counts as JSON")
    p.set_defaults(func=_cmd_pseudoword)

    p = sub.add_parser("convert", help="re-serialize an SGML corpus as pipe format")
    p.add_argument("corpus")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_convert)
    return parser


def _cmd_ground_truth(args: argparse.Namespace) -> int:
    counts = extract_ground_truth(args.corpus, args.output)
    print(f"wrote {len(counts)} lemmas to {args.output}")
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    vocab = train_embeddings(
        args.corpus,
        args.dim,
        args.output,
        seed=args.seed,
        window=args.window,
        epochs=args.epochs,
        negative=args.negative,
        min_count=args.min_count,
    )
    print(f"wrote {len(vocab)} x {args.dim} embeddings to {args.output}")
    return 0


def _cmd_pseudoword(args: argparse.Namespace) -> int:
    counts = substitute_file(args.corpus, load_rules(args.rules), args.output)
    payload = json.dumps(counts, indent=2, sort_keys=True)
    if args.counts_output:
        Path(args.counts_output).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    Path(args.output).write_text(
        to_pipe_format(load_corpus(args.corpus)), encoding="utf-8"
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CorpusFormatError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"corpusprep: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
