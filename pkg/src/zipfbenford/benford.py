"""Leading-digit statistics of EU counts compared with Benford's law."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from ._stats import pearson
from .errors import AnalysisError
from .freq_table import FrequencyTable, drop_top

DIGITS = tuple(range(1, 10))


@dataclass(frozen=True)
class DigitHistogram:
    """Counts of leading digits; ``counts[d - 1]`` is the tally for digit d."""

    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != 9 or any(c < 0 for c in counts):
            raise ValueError("a digit histogram holds nine non-negative counts")
        object.__setattr__(self, "counts", counts)

    @property
    def n_items(self) -> int:
        return sum(self.counts)

    def count(self, d: int) -> int:
        return self.counts[d - 1]

    def __add__(self, other):
        return DigitHistogram(tuple(a + b for a, b in zip(self.counts, other.counts)))


@dataclass(frozen=True)
class BenfordResult:
    empirical: tuple
    theoretical: tuple
    r: float
    n_items: int

    @property
    def pct_leading_1(self) -> float:
        return 100.0 * self.empirical[0]


@dataclass(frozen=True)
class EliminationSensitivity:
    r_full: float
    r_dropped: float
    relative_delta: float  # percent of r_full


def leading_digit(x: int) -> int:
    x = int(x)
    if x <= 0:
        raise ValueError(f"leading digit needs a positive integer, got {x}")
    while x >= 10:
        x //= 10
    return x


def leading_digits(values) -> np.ndarray:
    """Vectorized :func:`leading_digit` for an array of positive integers."""
    try:
        x = np.array(values, dtype=np.int64).ravel()
    except OverflowError:
        return np.array([leading_digit(v) for v in values], dtype=np.int64)
    if x.size and x.min() <= 0:
        raise ValueError("leading digits need positive integers")
    big = x >= 10
    while big.any():
        x[big] //= 10
        big = x >= 10
    return x


def digit_histogram(values) -> DigitHistogram:
    """Tally the leading digit of each value; hapax counts (1) land on digit 1."""
    d = leading_digits(values)
    return DigitHistogram(tuple(np.bincount(d, minlength=10)[1:].tolist()))


def benford_probabilities() -> np.ndarray:
    """``log10(1 + 1/d)`` for d = 1..9."""
    return np.log10(1.0 + 1.0 / np.arange(1, 10))


def benford_correlation(hist: DigitHistogram) -> BenfordResult:
    if hist.n_items == 0:
        raise AnalysisError("empty digit histogram")
    empirical = np.array(hist.counts, dtype=np.float64) / hist.n_items
    theoretical = benford_probabilities()
    r = pearson(empirical, theoretical)
    return BenfordResult(tuple(empirical.tolist()), tuple(theoretical.tolist()), r, hist.n_items)


def amalgamate(histograms) -> DigitHistogram:
    """Componentwise sum of digit histograms from several corpora."""
    histograms = list(histograms)
    if not histograms:
        raise AnalysisError("nothing to amalgamate")
    total = histograms[0]
    for h in histograms[1:]:
        total = total + h
    return total


def elimination_sensitivity(table: FrequencyTable, k: int) -> EliminationSensitivity:
    """Benford correlation before and after dropping the top ``k`` EUs."""
    r_full = benford_correlation(digit_histogram(table.counts)).r
    if k == 0:
        return EliminationSensitivity(r_full, r_full, 0.0)
    r_dropped = benford_correlation(digit_histogram(drop_top(table, k).counts)).r
    return EliminationSensitivity(r_full, r_dropped, 100.0 * (r_dropped - r_full) / r_full)


def digits_tsv(result: BenfordResult) -> str:
    """TSV of digit, empirical_proportion, benford_proportion."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(["digit", "empirical_proportion", "benford_proportion"])
    for d, e, t in zip(DIGITS, result.empirical, result.theoretical):
        writer.writerow([d, f"{e:.6f}", f"{t:.6f}"])
    return buf.getvalue()
