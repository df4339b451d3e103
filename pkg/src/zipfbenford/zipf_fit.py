"""Normalized Zipf reference curves and their correlation with data."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from ._stats import pearson
from .errors import ConfigError, WindowError
from .freq_table import FrequencyTable, RankWindow


@dataclass(frozen=True)
class ZipfCurve:
    """Predicted frequency ``C / n**alpha`` over ranks ``1..n_ranks``.

    ``C`` is the reciprocal of the generalized harmonic number, so the
    predictions sum to one over the full rank range.
    """

    alpha: float
    n_ranks: int
    C: float

    def predicted(self, n):
        return self.C * np.asarray(n, dtype=np.float64) ** -self.alpha


@dataclass(frozen=True)
class ZipfFitResult:
    window: RankWindow
    r: float
    curve: ZipfCurve


def harmonic_number(n_ranks: int, alpha: float = 1.0) -> float:
    # fsum keeps the sum correctly rounded for any N
    terms = np.arange(1, n_ranks + 1, dtype=np.float64) ** -alpha
    return math.fsum(terms.tolist())


def zipf_curve(n_ranks: int, alpha: float = 1.0) -> ZipfCurve:
    if int(n_ranks) != n_ranks or n_ranks < 1:
        raise ConfigError(f"number of ranks must be a positive integer, got {n_ranks}")
    if not alpha > 0:
        raise ConfigError(f"alpha must be positive, got {alpha}")
    return ZipfCurve(float(alpha), int(n_ranks), 1.0 / harmonic_number(int(n_ranks), alpha))


def zipf_correlation(table: FrequencyTable, curve: ZipfCurve, window: RankWindow) -> ZipfFitResult:
    """Correlate actual and predicted frequencies over ``window``.

    ``table`` may be a :func:`~zipfbenford.freq_table.drop_top` view, in which
    case the window is expressed in the original rank labels.
    """
    table.check_window(window)
    if window.hi > curve.n_ranks:
        raise WindowError(f"window {window} exceeds the curve's {curve.n_ranks} ranks")
    ranks, actual = table.window(window)
    return ZipfFitResult(window, pearson(actual, curve.predicted(ranks)), curve)


def zipf_plot_tsv(table: FrequencyTable, curve: ZipfCurve, window: RankWindow) -> str:
    """TSV with rank, actual_frequency, predicted_frequency over ``window``."""
    ranks, actual = table.window(window)
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(["rank", "actual_frequency", "predicted_frequency"])
    for n, f, p in zip(ranks, actual, curve.predicted(ranks)):
        writer.writerow([int(n), f"{f:.6f}", f"{p:.6f}"])
    return buf.getvalue()


# --------------------------------------------------------------------------
# synthetic tables
# --------------------------------------------------------------------------

def _labels(n_ranks):
    width = max(6, len(str(n_ranks)))
    return tuple(f"w{n:0{width}d}" for n in range(1, n_ranks + 1))


def _table_from_expected(expected, seed, noise):
    if noise:
        rng = np.random.default_rng(seed)
        counts = rng.poisson(expected)
    else:
        # half-up rounding, independent of numpy's round-half-even
        counts = np.floor(expected + 0.5)
    counts = np.maximum(1, counts).astype(np.int64)
    return FrequencyTable.from_counts(dict(zip(_labels(len(counts)), counts.tolist())))


def sample_zipf_table(n_ranks: int, total: int, alpha: float = 1.0, seed: int = 0,
                      noise: bool = False) -> FrequencyTable:
    """Synthetic table with ``count(n) = max(1, round(total * C * n**-alpha))``.

    Labels are ``w000001``, ``w000002``, ... in rank order. With
    ``noise=True`` each count is instead a Poisson draw around its expected
    value, seeded by ``seed``; the noiseless default ignores the seed.

    >>> sample_zipf_table(3, 100).counts.tolist()
    [55, 27, 18]
    """
    if total < n_ranks:
        raise ConfigError(f"total ({total}) must be at least the number of ranks ({n_ranks})")
    curve = zipf_curve(n_ranks, alpha)
    expected = total * curve.predicted(np.arange(1, n_ranks + 1))
    return _table_from_expected(expected, seed, noise)


def sample_piecewise_table(n_ranks: int, total: int, alphas, breakpoints, seed: int = 0,
                           noise: bool = False) -> FrequencyTable:
    """Synthetic table following a continuous broken power law.

    ``alphas`` has one more entry than ``breakpoints``; exponent
    ``alphas[i]`` applies to ranks after ``breakpoints[i-1]`` up to and
    including ``breakpoints[i]``. For example ``alphas=(1.0, 2.39)`` with
    ``breakpoints=(33,)`` gives slope -1 through rank 33 and -2.39 after.
    The curve is normalized over ``1..n_ranks`` before scaling by ``total``.
    """
    alphas = [float(a) for a in alphas]
    breakpoints = [int(b) for b in breakpoints]
    if len(alphas) != len(breakpoints) + 1:
        raise ConfigError("need exactly one more exponent than breakpoints")
    if any(a <= 0 for a in alphas):
        raise ConfigError("exponents must be positive")
    if breakpoints and (breakpoints != sorted(set(breakpoints))
                        or breakpoints[0] < 1 or breakpoints[-1] >= n_ranks):
        raise ConfigError("breakpoints must be strictly ascending ranks inside 1..n_ranks-1")
    if total < n_ranks:
        raise ConfigError(f"total ({total}) must be at least the number of ranks ({n_ranks})")

    ranks = np.arange(1, n_ranks + 1)
    log_n = np.log(ranks.astype(np.float64))
    log_f = -alphas[0] * log_n
    # each later segment continues from the value at its left breakpoint
    for b, a_prev, a in zip(breakpoints, alphas, alphas[1:]):
        tail = ranks > b
        log_f[tail] += (a - a_prev) * (math.log(b) - log_n[tail])
    f = np.exp(log_f)
    expected = total * f / math.fsum(f.tolist())
    return _table_from_expected(expected, seed, noise)


def expand_to_tokens(table: FrequencyTable, seed: int | None = None) -> list:
    """Token list reproducing ``table``; shuffled when ``seed`` is given."""
    tokens = np.repeat(np.array(table.eus, dtype=object), table.counts)
    if seed is not None:
        np.random.default_rng(seed).shuffle(tokens)
    return tokens.tolist()
