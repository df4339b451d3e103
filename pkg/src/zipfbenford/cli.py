"""Command-line entry point.

    zipfbenford analyze --manifest FILE [options]
    zipfbenford analyze --input FILE --mode natural|java|cpp [options]
    zipfbenford synth --n N --total T --alpha F --seed S --out FILE
    zipfbenford digits --input COUNTS_FILE

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 analysis error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import __version__
from .benford import benford_correlation, digit_histogram, digits_tsv
from .corpus_io import ENCODINGS, MODES, CorpusSpec, parse_manifest
from .errors import ConfigError, CorpusLoadError, ZipfBenfordError
from .freq_table import RankWindow
from .report import FORMATS, AnalysisConfig, emit, run, to_json
from .tokenizer import FOLDS
from .zipf_fit import expand_to_tokens, sample_zipf_table

log = logging.getLogger("zipfbenford")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_ANALYSIS = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; usage errors here are 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _window(text):
    try:
        return RankWindow.parse(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(exc.message) from None


def _breakpoints(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if part in ("max", "N", "n"):
            out.append(None)
            continue
        try:
            out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad breakpoint {part!r}") from None
    return tuple(out)


def build_parser():
    parser = _Parser(prog="zipfbenford", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="Zipf and Benford statistics for one or more corpora")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--manifest", help="tab-separated corpus manifest")
    src.add_argument("--input", help="single corpus file")
    p.add_argument("--mode", choices=MODES, help="tokenizer for --input")
    p.add_argument("--encoding", choices=tuple(ENCODINGS), default="utf8")
    p.add_argument("--label", help="label for --input (default: file name stem)")
    p.add_argument("--drop-top", type=int, default=10, metavar="K")
    p.add_argument("--full-window", type=_window, default=RankWindow(1, 100), metavar="LO:HI")
    p.add_argument("--dropped-window", type=_window, default=None, metavar="LO:HI",
                   help="default: K+1:K+100")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--breakpoints", type=_breakpoints, default=None, metavar="a,b,...",
                   help="ranks for piecewise slopes; 'max' stands for the last rank")
    p.add_argument("--fold", choices=FOLDS, default="upper")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--out", metavar="DIR", help="directory for per-corpus artifacts")
    p.add_argument("--dump-tokens", metavar="FILE",
                   help="write the token stream, one EU per line ('-' for stdout)")

    p = sub.add_parser("synth", help="write a synthetic Zipf token stream")
    p.add_argument("--n", type=int, required=True, help="number of distinct EUs")
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise", action="store_true", help="Poisson counts instead of rounded ones")
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("digits", help="Benford report for a list of positive integers")
    p.add_argument("--input", required=True, metavar="COUNTS_FILE")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    return parser


def _cmd_analyze(args):
    if args.manifest:
        if args.mode:
            raise ConfigError("--mode applies to --input only; the manifest names each mode")
        specs = parse_manifest(args.manifest)
    else:
        if not args.mode:
            raise ConfigError("--input requires --mode")
        label = args.label or os.path.splitext(os.path.basename(args.input))[0]
        specs = [CorpusSpec(label, args.input, args.mode, args.encoding)]
    config = AnalysisConfig(
        drop_k=args.drop_top,
        full_window=args.full_window,
        dropped_window=args.dropped_window,
        alpha=args.alpha,
        breakpoints=args.breakpoints,
        fold=args.fold,
        output_format=args.format,
    )
    sink = None
    if args.dump_tokens == "-":
        sink = sys.stdout
    elif args.dump_tokens:
        sink = open(args.dump_tokens, "w", encoding="utf-8", newline="\n")
    try:
        report = run(specs, config, args.out, sink)
    finally:
        if sink is not None and sink is not sys.stdout:
            sink.close()
    if sink is not sys.stdout:
        sys.stdout.write(emit(report, args.format))
    return EXIT_OK


def _cmd_synth(args):
    table = sample_zipf_table(args.n, args.total, args.alpha, args.seed, noise=args.noise)
    tokens = expand_to_tokens(table, seed=args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        for i in range(0, len(tokens), 20):
            fh.write(" ".join(tokens[i:i + 20]) + "\n")
    log.info("wrote %d tokens over %d EUs to %s", len(tokens), len(table), args.out)
    return EXIT_OK


def _cmd_digits(args):
    try:
        with open(args.input, encoding="utf-8") as fh:
            values = [int(line) for line in fh if line.strip()]
    except OSError as exc:
        raise CorpusLoadError(f"cannot read {args.input}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise CorpusLoadError(f"{args.input}: {exc}") from exc
    if any(v <= 0 for v in values):
        raise CorpusLoadError(f"{args.input}: every value must be a positive integer")
    result = benford_correlation(digit_histogram(values))
    if args.format == "json":
        doc = {
            "n_items": result.n_items,
            "empirical": list(result.empirical),
            "benford": list(result.theoretical),
            "r_benford": result.r,
            "pct_leading_1": result.pct_leading_1,
        }
        sys.stdout.write(to_json(doc) + "\n")
    else:
        sys.stdout.write(digits_tsv(result))
        sys.stdout.write(f"# n_items\t{result.n_items}\n")
        sys.stdout.write(f"# r_benford\t{result.r:.6f}\n")
        sys.stdout.write(f"# pct_leading_1\t{result.pct_leading_1:.6f}\n")
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    commands = {"analyze": _cmd_analyze, "synth": _cmd_synth, "digits": _cmd_digits}
    try:
        return commands[args.command](args)
    except ZipfBenfordError as exc:
        print(f"zipfbenford: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"zipfbenford: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
