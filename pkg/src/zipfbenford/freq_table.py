"""Ranked frequency tables of expression units."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import AnalysisError, ConfigError, WindowError


@dataclass(frozen=True)
class RankWindow:
    """Inclusive rank interval ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self):
        if int(self.lo) != self.lo or int(self.hi) != self.hi:
            raise ConfigError(f"rank window bounds must be integers, got {self.lo}:{self.hi}")
        if not 1 <= self.lo <= self.hi:
            raise ConfigError(f"invalid rank window {self.lo}:{self.hi}; need 1 <= lo <= hi")

    @classmethod
    def parse(cls, text: str) -> "RankWindow":
        """Parse ``"LO:HI"``."""
        try:
            lo, hi = text.split(":")
            return cls(int(lo), int(hi))
        except ValueError:
            raise ConfigError(f"rank window must look like LO:HI, got {text!r}") from None

    def __len__(self):
        return self.hi - self.lo + 1

    def __str__(self):
        return f"{self.lo}:{self.hi}"


@dataclass(frozen=True, eq=False)
class FrequencyTable:
    """EUs sorted by descending count, ties broken by ascending EU.

    A table produced by :func:`drop_top` is a *view*: ``rank_offset`` is the
    number of leading ranks removed, and frequencies are still relative to
    the ``total_tokens`` of the original table.
    """

    eus: tuple
    counts: np.ndarray
    total_tokens: int
    rank_offset: int = 0

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        if len(self.eus) != len(counts):
            raise ValueError("eus and counts differ in length")

    @classmethod
    def from_counts(cls, counter) -> "FrequencyTable":
        """Build a table from a mapping of EU -> count."""
        items = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
        if any(c < 1 for _, c in items):
            raise ValueError("counts must be positive")
        eus = tuple(k for k, _ in items)
        counts = np.fromiter((c for _, c in items), dtype=np.int64, count=len(items))
        return cls(eus, counts, int(counts.sum()))

    @property
    def unique_count(self) -> int:
        return len(self.eus)

    @property
    def first_rank(self) -> int:
        return self.rank_offset + 1

    @property
    def max_rank(self) -> int:
        return self.rank_offset + len(self.eus)

    @property
    def ranks(self) -> np.ndarray:
        return np.arange(self.first_rank, self.max_rank + 1)

    @property
    def frequencies(self) -> np.ndarray:
        if self.total_tokens == 0:
            return np.zeros(0)
        return self.counts / self.total_tokens

    def __len__(self):
        return len(self.eus)

    def __eq__(self, other):
        if not isinstance(other, FrequencyTable):
            return NotImplemented
        return (
            self.eus == other.eus
            and np.array_equal(self.counts, other.counts)
            and self.total_tokens == other.total_tokens
            and self.rank_offset == other.rank_offset
        )

    def _index(self, rank):
        if not self.first_rank <= rank <= self.max_rank:
            raise WindowError(f"rank {rank} outside table ranks {self.first_rank}..{self.max_rank}")
        return rank - self.first_rank

    def count(self, rank: int) -> int:
        return int(self.counts[self._index(rank)])

    def frequency(self, rank: int) -> float:
        return self.count(rank) / self.total_tokens

    def eu(self, rank: int) -> str:
        return self.eus[self._index(rank)]

    def check_window(self, window: RankWindow, min_points: int = 2):
        if window.lo < self.first_rank or window.hi > self.max_rank:
            raise WindowError(
                f"window {window} exceeds table ranks {self.first_rank}..{self.max_rank}"
            )
        if len(window) < min_points:
            raise WindowError(f"window {window} holds fewer than {min_points} ranks")

    def window(self, window: RankWindow):
        """Return ``(ranks, frequencies)`` over ``window``."""
        self.check_window(window, min_points=1)
        a = window.lo - self.first_rank
        b = window.hi - self.first_rank + 1
        return self.ranks[a:b], self.frequencies[a:b]


def build_frequency_table(stream) -> FrequencyTable:
    """Count EUs in a token stream (or any iterable of tokens)."""
    return FrequencyTable.from_counts(Counter(stream))


def drop_top(table: FrequencyTable, k: int) -> FrequencyTable:
    """Remove the ``k`` most frequent entries, keeping original ranks and frequencies."""
    if k < 0:
        raise ConfigError(f"drop count must be non-negative, got {k}")
    if k >= len(table):
        raise AnalysisError(f"cannot drop {k} of {len(table)} entries")
    return FrequencyTable(
        table.eus[k:], table.counts[k:], table.total_tokens, table.rank_offset + k
    )


def rankfreq_tsv(table: FrequencyTable) -> str:
    """Export as TSV with columns rank, eu, count, frequency."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(["rank", "eu", "count", "frequency"])
    for rank, eu, count, freq in zip(table.ranks, table.eus, table.counts, table.frequencies):
        writer.writerow([int(rank), eu, int(count), f"{freq:.6f}"])
    return buf.getvalue()


def read_rankfreq_tsv(path) -> FrequencyTable:
    """Rebuild a full table from an exported rank/count TSV."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh, delimiter="\t")
        rows = [(row["eu"], int(row["count"])) for row in reader]
    return FrequencyTable.from_counts(dict(rows))
