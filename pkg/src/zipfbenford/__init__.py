"""Zipf rank-frequency and Benford leading-digit statistics for texts and code."""

__version__ = "0.1.0"

from .benford import (
    BenfordResult,
    DigitHistogram,
    EliminationSensitivity,
    amalgamate,
    benford_correlation,
    benford_probabilities,
    digit_histogram,
    elimination_sensitivity,
    leading_digit,
)
from .corpus_io import CorpusSpec, RawText, load_corpus, parse_manifest
from .errors import (
    AnalysisError,
    ConfigError,
    CorpusLoadError,
    ManifestError,
    UndefinedCorrelationError,
    WindowError,
    ZipfBenfordError,
)
from .freq_table import FrequencyTable, RankWindow, build_frequency_table, drop_top
from .powerlaw_fit import LogLogFit, fit_segments, loglog_fit
from .report import AnalysisConfig, CorpusSummary, RunReport, analyze, analyze_table, emit, run, summarize_run
from .tokenizer import TokenStream, strip_comments, tokenize, tokenize_code, tokenize_natural
from .zipf_fit import ZipfCurve, ZipfFitResult, sample_piecewise_table, sample_zipf_table, zipf_correlation, zipf_curve
