"""Batch command-line interface.

Exit statuses: 0 success, 2 usage error, 3 I/O error, 4 data-format error,
5 evaluation-domain error (unknown word, neighbor count out of range,
empty bucket, and similar).
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path

from .errors import DataFormatError, DomainError
from .evaluation import (
    SweepConfig,
    evaluate_bucket,
    load_ground_truth,
    sweep,
    write_plot_table,
    write_reports_json,
    write_summary_csv,
)
from .embeddings import METRICS, load_embeddings
from .persistence import write_diagram_csv
from .senses import estimate_senses, local_diagram, removal_probe

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_DOMAIN = 5

_EXIT_HELP = """\
exit status:
  0  success
  2  usage error (bad flags or argument values)
  3  I/O error (missing or unreadable file)
  4  data-format error (malformed embedding or ground-truth file)
  5  evaluation-domain error (unknown word, k out of range, empty bucket)
"""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _dim_path(text: str) -> tuple[int, Path]:
    dim, sep, path = text.partition("=")
    if not sep or not path:
        raise argparse.ArgumentTypeError(
            f"expected DIM=PATH, got {text!r}"
        )
    try:
        return int(dim), Path(path)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected DIM=PATH, got {text!r}") from None


@contextlib.contextmanager
def _out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _add_common(parser: argparse.ArgumentParser, neighbors_min: int = 1) -> None:
    parser.add_argument(
        "--embeddings", required=True, help="plain-text embedding file ('N d' header)"
    )
    parser.add_argument(
        "--neighbors",
        "-k",
        type=_positive_int if neighbors_min else _nonnegative_int,
        required=True,
        help="neighbor count k; the local cloud has k+1 points",
    )
    parser.add_argument("--metric", choices=METRICS, default="euclidean")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toposense",
        description="Word sense estimation from the 0-dimensional persistent "
        "homology of local embedding neighborhoods.",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "barcode",
        help="write the H0 barcode of one word's local cloud as CSV",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("word")
    _add_common(p, neighbors_min=0)
    p.add_argument(
        "--literal-reduction",
        action="store_true",
        help="use the boundary-matrix reduction instead of the union-find route",
    )
    p.add_argument(
        "--index-units",
        action="store_true",
        help="report deaths as filtration indices instead of distances",
    )
    p.add_argument("--output", help="output CSV path (default: stdout)")
    p.set_defaults(func=_cmd_barcode)

    p = sub.add_parser(
        "induce",
        help="estimate sense counts for one or more words (JSON lines)",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("words", nargs="+", metavar="word")
    _add_common(p)
    p.add_argument("--sigma", type=_nonnegative_float, default=2.0)
    p.add_argument("--literal-reduction", action="store_true")
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser(
        "probe",
        help="component-count change when the word's own point is removed",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("word")
    _add_common(p)
    p.add_argument(
        "--epsilon",
        type=_positive_float,
        default=None,
        help="neighborhood-graph scale (default: the significance threshold)",
    )
    p.add_argument("--sigma", type=_nonnegative_float, default=2.0)
    p.add_argument("--output", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser(
        "evaluate",
        help="error metrics for one bucket of ground-truth words",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_common(p)
    p.add_argument("--ground-truth", required=True, help="token<TAB>count file")
    p.add_argument("--sigma", type=_nonnegative_float, default=2.0)
    p.add_argument(
        "--bucket",
        nargs=2,
        type=_positive_int,
        metavar=("MIN", "MAX"),
        default=(2, 19),
        help="sense-count bucket bounds, inclusive (default: 2 19)",
    )
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--literal-reduction", action="store_true")
    p.add_argument("--output", required=True, help="report JSON path")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser(
        "sweep",
        help="evaluate a hyperparameter grid and emit report and plot tables",
        epilog=_EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument(
        "--embeddings",
        nargs="+",
        type=_dim_path,
        required=True,
        metavar="DIM=PATH",
        help="one embedding file per dimension",
    )
    p.add_argument("--ground-truth", required=True)
    p.add_argument(
        "--neighbors", "-k", nargs="+", type=_positive_int, required=True
    )
    p.add_argument("--sigmas", nargs="+", type=_nonnegative_float, default=[2.0])
    p.add_argument(
        "--bucket",
        nargs=2,
        type=_positive_int,
        action="append",
        metavar=("MIN", "MAX"),
        help="may repeat; default buckets are 2 9 and 10 19",
    )
    p.add_argument("--metric", choices=METRICS, default="euclidean")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--literal-reduction", action="store_true")
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=_cmd_sweep)
    return parser


def _cmd_barcode(args: argparse.Namespace) -> int:
    matrix = load_embeddings(args.embeddings)
    _, diagram = local_diagram(
        matrix, args.word, args.neighbors, args.metric, args.literal_reduction
    )
    with _out(args.output) as fh:
        write_diagram_csv(diagram, fh, index_units=args.index_units)
    return EXIT_OK


def _cmd_induce(args: argparse.Namespace) -> int:
    matrix = load_embeddings(args.embeddings)
    with _out(args.output) as fh:
        for word in args.words:
            estimate = estimate_senses(
                matrix,
                word,
                args.neighbors,
                args.sigma,
                args.metric,
                args.literal_reduction,
            )
            fh.write(json.dumps(estimate.to_json_dict(), sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_probe(args: argparse.Namespace) -> int:
    matrix = load_embeddings(args.embeddings)
    delta = removal_probe(
        matrix, args.word, args.neighbors, args.epsilon, args.metric, args.sigma
    )
    with _out(args.output) as fh:
        fh.write(json.dumps(delta.to_json_dict(), sort_keys=True) + "\n")
    return EXIT_OK


def _cmd_evaluate(args: argparse.Namespace) -> int:
    matrix = load_embeddings(args.embeddings)
    truth = load_ground_truth(args.ground_truth)
    report = evaluate_bucket(
        matrix,
        truth,
        args.neighbors,
        args.sigma,
        tuple(args.bucket),
        args.metric,
        workers=args.workers,
        literal_reduction=args.literal_reduction,
    )
    with open(args.output, "w", encoding="utf-8") as fh:
        json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    buckets = [tuple(b) for b in (args.bucket or [(2, 9), (10, 19)])]
    config = SweepConfig(
        embedding_sources=list(args.embeddings),
        neighbor_counts=list(args.neighbors),
        sigma_multipliers=list(args.sigmas),
        buckets=buckets,
        metric=args.metric,
    )
    truth = load_ground_truth(args.ground_truth)
    result = sweep(
        config, truth, workers=args.workers, literal_reduction=args.literal_reduction
    )
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / "reports.json", "w", encoding="utf-8") as fh:
        write_reports_json(result, fh)
    with open(out_dir / "summary.csv", "w", encoding="utf-8") as fh:
        write_summary_csv(result.reports, fh)
    with open(out_dir / "plot.csv", "w", encoding="utf-8") as fh:
        write_plot_table(result.reports, fh)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataFormatError as exc:
        print(f"toposense: data format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except DomainError as exc:
        print(f"toposense: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"toposense: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
