"""Per-corpus pipeline, run summaries and deterministic report emission.

The pipeline for one corpus is::

    load -> tokenize -> frequency table -> Zipf correlation (full, dropped)
         -> log-log slope (dropped window, optional segments)
         -> leading-digit histogram -> Benford correlation -> elimination check

All floats in emitted reports carry six decimal places.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import re
from contextlib import contextmanager
from dataclasses import dataclass, field

from .benford import (
    BenfordResult,
    DigitHistogram,
    amalgamate,
    benford_correlation,
    digit_histogram,
    digits_tsv,
    elimination_sensitivity,
)
from .corpus_io import CorpusSpec, load_corpus
from .errors import AnalysisError, ConfigError, ZipfBenfordError
from .freq_table import FrequencyTable, RankWindow, build_frequency_table, drop_top, rankfreq_tsv
from .powerlaw_fit import LogLogFit, fit_segments, loglog_fit, loglog_plot_tsv
from .tokenizer import FOLDS, tokenize
from .zipf_fit import zipf_correlation, zipf_curve, zipf_plot_tsv

FORMATS = ("json", "csv", "tsv")

SUMMARY_FIELDS = (
    "label",
    "total_tokens",
    "unique_count",
    "r_zipf_full",
    "r_zipf_dropped",
    "alpha_hat",
    "segment_fits",
    "r_benford",
    "pct_leading_1",
    "benford_delta_pct",
)


@dataclass(frozen=True)
class AnalysisConfig:
    """Run parameters: drop the top 10, correlate over 1:100 and 11:110, alpha 1.

    When ``dropped_window`` is omitted it becomes ``[drop_k + 1, drop_k + 100]``.
    ``breakpoints`` may end in ``None``, meaning the last rank of the table.
    """

    drop_k: int = 10
    full_window: RankWindow = RankWindow(1, 100)
    dropped_window: RankWindow | None = None
    alpha: float = 1.0
    breakpoints: tuple | None = None
    fold: str = "upper"
    output_format: str = "json"

    def __post_init__(self):
        if self.drop_k < 0:
            raise ConfigError(f"drop count must be non-negative, got {self.drop_k}")
        if self.dropped_window is None:
            object.__setattr__(
                self, "dropped_window", RankWindow(self.drop_k + 1, self.drop_k + 100)
            )
        if self.dropped_window.lo <= self.drop_k:
            raise ConfigError(
                f"dropped window {self.dropped_window} starts inside the "
                f"{self.drop_k} eliminated ranks"
            )
        if not self.alpha > 0:
            raise ConfigError(f"alpha must be positive, got {self.alpha}")
        if self.fold not in FOLDS:
            raise ConfigError(f"unknown fold {self.fold!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if self.breakpoints is not None:
            object.__setattr__(self, "breakpoints", tuple(self.breakpoints))
            if not self.breakpoints:
                raise ConfigError("breakpoint list is empty")


@dataclass(frozen=True)
class CorpusSummary:
    label: str
    total_tokens: int
    unique_count: int
    r_zipf_full: float
    r_zipf_dropped: float
    alpha_hat: float
    segment_fits: tuple | None
    r_benford: float
    pct_leading_1: float
    benford_delta_pct: float
    # kept for amalgamation and artifacts, never emitted
    histogram: DigitHistogram = field(repr=False, compare=False, default=None)
    dropped_fit: LogLogFit = field(repr=False, compare=False, default=None)


@dataclass(frozen=True)
class RunReport:
    corpora: tuple = ()
    amalgamated: BenfordResult | None = None
    amalgamated_histogram: DigitHistogram | None = field(repr=False, default=None)


@contextmanager
def _stage(label, name):
    """Tag library errors raised inside the block with corpus label and stage."""
    try:
        yield
    except ZipfBenfordError as exc:
        if exc.label is None:
            exc.label = label
        if exc.stage is None:
            exc.stage = name
        raise


def _resolve_breakpoints(breakpoints, table):
    return [table.max_rank if b is None else int(b) for b in breakpoints]


def analyze_table(label: str, table: FrequencyTable, config: AnalysisConfig | None = None) -> CorpusSummary:
    """Zipf, log-log and Benford statistics for an already counted corpus."""
    config = config or AnalysisConfig()
    if len(table) == 0:
        raise AnalysisError("corpus produced no tokens", label=label, stage="frequency_table")
    curve = zipf_curve(len(table), config.alpha)
    with _stage(label, "zipf_full"):
        r_full = zipf_correlation(table, curve, config.full_window).r
    with _stage(label, "drop_top"):
        dropped = drop_top(table, config.drop_k)
    with _stage(label, "zipf_dropped"):
        r_dropped = zipf_correlation(dropped, curve, config.dropped_window).r
    with _stage(label, "loglog_fit"):
        dropped_fit = loglog_fit(dropped, config.dropped_window)
    segments = None
    if config.breakpoints:
        with _stage(label, "fit_segments"):
            segments = tuple(fit_segments(table, _resolve_breakpoints(config.breakpoints, table)))
    with _stage(label, "benford"):
        hist = digit_histogram(table.counts)
        benford = benford_correlation(hist)
    with _stage(label, "elimination_sensitivity"):
        sens = elimination_sensitivity(table, config.drop_k)
    return CorpusSummary(
        label=label,
        total_tokens=table.total_tokens,
        unique_count=table.unique_count,
        r_zipf_full=r_full,
        r_zipf_dropped=r_dropped,
        alpha_hat=dropped_fit.alpha_hat,
        segment_fits=segments,
        r_benford=benford.r,
        pct_leading_1=benford.pct_leading_1,
        benford_delta_pct=sens.relative_delta,
        histogram=hist,
        dropped_fit=dropped_fit,
    )


def analyze(spec: CorpusSpec, config: AnalysisConfig | None = None, out_dir=None,
            token_sink=None) -> CorpusSummary:
    """Run the whole pipeline for one corpus.

    When ``out_dir`` is given the per-corpus artifacts are written there.
    ``token_sink``, if given, is a text stream that receives one EU per line.
    """
    config = config or AnalysisConfig()
    with _stage(spec.label, "load"):
        raw = load_corpus(spec)
    with _stage(spec.label, "tokenize"):
        stream = tokenize(raw, spec.mode, config.fold)
    if token_sink is not None:
        for tok in stream:
            token_sink.write(tok + "\n")
    table = build_frequency_table(stream)
    summary = analyze_table(spec.label, table, config)
    if out_dir is not None:
        write_artifacts(summary, table, config, out_dir)
    return summary


def summarize_run(summaries) -> RunReport:
    summaries = tuple(summaries)
    if not summaries:
        raise AnalysisError("no corpus summaries to combine")
    hists = [s.histogram for s in summaries if s.histogram is not None]
    if not hists:
        raise AnalysisError("no corpus summary retains a digit histogram")
    merged = amalgamate(hists)
    return RunReport(summaries, benford_correlation(merged), merged)


def run(specs, config: AnalysisConfig | None = None, out_dir=None, token_sink=None) -> RunReport:
    """Analyze every corpus in manifest order and write the run summary."""
    config = config or AnalysisConfig()
    summaries = [analyze(s, config, out_dir, token_sink) for s in specs]
    report = summarize_run(summaries) if summaries else RunReport()
    if out_dir is not None:
        _write(os.path.join(out_dir, f"run.summary.{config.output_format}"),
               emit(report, config.output_format))
    return report


# --------------------------------------------------------------------------
# emission
# --------------------------------------------------------------------------

def _fmt_float(x):
    if x is None or not math.isfinite(x):
        return None
    return f"{x:.6f}"


def _segment_dicts(fits):
    if fits is None:
        return None
    return [
        {"window": str(f.window), "slope": f.slope, "intercept": f.intercept,
         "r": f.r, "alpha_hat": f.alpha_hat}
        for f in fits
    ]


def _summary_dict(s: CorpusSummary) -> dict:
    d = {name: getattr(s, name) for name in SUMMARY_FIELDS}
    d["segment_fits"] = _segment_dicts(s.segment_fits)
    return d


def _amalgamated_dict(report: RunReport) -> dict:
    b = report.amalgamated
    d = {"n_items": b.n_items}
    if report.amalgamated_histogram is not None:
        d["digit_counts"] = list(report.amalgamated_histogram.counts)
    d["r_benford"] = b.r
    d["pct_leading_1"] = b.pct_leading_1
    return d


def to_json(obj, indent=0) -> str:
    """JSON text with two-space indents and six-decimal floats."""
    # json.dumps cannot pin float precision, so floats are written by hand
    pad = "  " * (indent + 1)
    end = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj) or "null"
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{to_json(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if not any(isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        items = [pad + to_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return _fmt_float(value) or ""
    return str(value)


def _segment_cell(fits):
    if not fits:
        return ""
    return ";".join(f"{f.window}={f.alpha_hat:.6f}" for f in fits)


def _tabular(rows, delimiter) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow(SUMMARY_FIELDS)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in SUMMARY_FIELDS])
    return buf.getvalue()


def emit(report, fmt: str = "json") -> str:
    """Serialize a :class:`CorpusSummary` or :class:`RunReport`.

    Output is a pure function of its input, so identical runs give
    byte-identical files.
    """
    if fmt not in FORMATS:
        raise ConfigError(f"unknown output format {fmt!r}")
    if isinstance(report, CorpusSummary):
        if fmt == "json":
            return to_json(_summary_dict(report)) + "\n"
        row = _summary_dict(report)
        row["segment_fits"] = _segment_cell(report.segment_fits)
        return _tabular([row], "," if fmt == "csv" else "\t")
    if not isinstance(report, RunReport):
        raise TypeError(f"cannot emit {type(report).__name__}")
    if fmt == "json":
        doc = {
            "corpora": [_summary_dict(s) for s in report.corpora],
            "amalgamated": None if report.amalgamated is None else _amalgamated_dict(report),
        }
        return to_json(doc) + "\n"
    rows = []
    for s in report.corpora:
        row = _summary_dict(s)
        row["segment_fits"] = _segment_cell(s.segment_fits)
        rows.append(row)
    if report.amalgamated is not None:
        rows.append({"label": "amalgamated", "r_benford": report.amalgamated.r,
                     "pct_leading_1": report.amalgamated.pct_leading_1})
    return _tabular(rows, "," if fmt == "csv" else "\t")


def _safe_label(label):
    return re.sub(r"[^\w.-]", "_", label)


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc.strerror or exc}") from exc


def write_artifacts(summary: CorpusSummary, table: FrequencyTable, config: AnalysisConfig, out_dir):
    """Write summary, rank/frequency, Zipf, log-log and digit files for one corpus."""
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out_dir}: {exc.strerror or exc}") from exc
    stem = os.path.join(out_dir, _safe_label(summary.label))
    fmt = config.output_format
    _write(f"{stem}.summary.{fmt}", emit(summary, fmt))
    _write(f"{stem}.rankfreq.tsv", rankfreq_tsv(table))

    curve = zipf_curve(len(table), config.alpha)
    lo = min(config.full_window.lo, config.dropped_window.lo)
    hi = min(max(config.full_window.hi, config.dropped_window.hi), table.max_rank)
    _write(f"{stem}.zipf.tsv", zipf_plot_tsv(table, curve, RankWindow(lo, hi)))

    fits = [summary.dropped_fit] + list(summary.segment_fits or ())
    _write(f"{stem}.loglog.tsv", loglog_plot_tsv(table, fits))
    _write(f"{stem}.digits.tsv", digits_tsv(benford_correlation(summary.histogram)))
