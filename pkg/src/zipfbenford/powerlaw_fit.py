"""Least-squares power-law exponents from ln f(n) vs ln n."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, WindowError
from .freq_table import FrequencyTable, RankWindow


@dataclass(frozen=True)
class LogLogFit:
    window: RankWindow
    slope: float
    intercept: float
    r: float

    @property
    def alpha_hat(self) -> float:
        return abs(self.slope)

    def fitted(self, ln_rank):
        return self.intercept + self.slope * np.asarray(ln_rank, dtype=np.float64)


def ols_line(x, y):
    """Unweighted least-squares line through (x, y); returns slope, intercept, r."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(x) < 2 or np.ptp(x) == 0:
        raise WindowError("a line fit needs at least two distinct abscissae")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = np.dot(dx, dx)
    syy = np.dot(dy, dy)
    slope = np.dot(dx, dy) / sxx
    intercept = y.mean() - slope * x.mean()
    # a flat line has no linear association to report
    r = 0.0 if np.ptp(y) == 0 else float(np.clip(np.dot(dx, dy) / np.sqrt(sxx * syy), -1.0, 1.0))
    return float(slope), float(intercept), r


def loglog_fit(table: FrequencyTable, window: RankWindow) -> LogLogFit:
    """Fit ``ln f = intercept + slope * ln n`` over the ranks in ``window``.

    Parameters
    ----------
    table : FrequencyTable
        Full table or a :func:`drop_top` view; ranks are original labels.
    window : RankWindow
        Inclusive rank range, at least two ranks wide.

    Returns
    -------
    LogLogFit
        ``alpha_hat`` is the modulus of the fitted slope.
    """
    table.check_window(window)
    ranks, freqs = table.window(window)
    ln_n = np.log(ranks.astype(np.float64))
    ln_f = np.log(freqs)
    slope, intercept, r = ols_line(ln_n, ln_f)
    return LogLogFit(window, slope, intercept, r)


def segment_windows(breakpoints, first_rank: int = 1) -> list[RankWindow]:
    """Consecutive inclusive windows from ascending breakpoints.

    ``(12, 33, 200)`` gives ``[12, 33]`` and ``[34, 200]``. A single
    breakpoint ``k`` gives one window from ``first_rank`` to ``k``.
    """
    bps = [int(b) for b in breakpoints]
    if not bps:
        raise ConfigError("at least one breakpoint is required")
    if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
        raise ConfigError(f"breakpoints must be strictly ascending, got {bps}")
    if len(bps) == 1:
        return [RankWindow(first_rank, bps[0])]
    windows = [RankWindow(bps[0], bps[1])]
    windows += [RankWindow(lo + 1, hi) for lo, hi in zip(bps[1:], bps[2:])]
    return windows


def fit_segments(table: FrequencyTable, breakpoints) -> list[LogLogFit]:
    windows = segment_windows(breakpoints, table.first_rank)
    for w in windows:
        if w.lo < table.first_rank or w.hi > table.max_rank:
            raise WindowError(
                f"breakpoint window {w} outside table ranks {table.first_rank}..{table.max_rank}"
            )
    return [loglog_fit(table, w) for w in windows]


def loglog_plot_tsv(table: FrequencyTable, fits) -> str:
    """TSV of ln_rank, ln_frequency and fitted_value for each fit's window."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(["window", "ln_rank", "ln_frequency", "fitted_value"])
    for fit in fits:
        ranks, freqs = table.window(fit.window)
        ln_n = np.log(ranks.astype(np.float64))
        for x, y, yhat in zip(ln_n, np.log(freqs), fit.fitted(ln_n)):
            writer.writerow([str(fit.window), f"{x:.6f}", f"{y:.6f}", f"{yhat:.6f}"])
    return buf.getvalue()
