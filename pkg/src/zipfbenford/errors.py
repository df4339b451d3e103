"""Exception hierarchy.

The three top-level families map onto the CLI exit codes: configuration
problems exit with 1, unreadable corpora with 2 and failed numerical
preconditions with 3.
"""


class ZipfBenfordError(Exception):
    """Base class. ``label`` and ``stage`` are filled in by the pipeline."""

    exit_code = 1

    def __init__(self, message, label=None, stage=None):
        super().__init__(message)
        self.message = message
        self.label = label
        self.stage = stage

    def __str__(self):
        prefix = ""
        if self.label is not None:
            prefix += f"[{self.label}] "
        if self.stage is not None:
            prefix += f"{self.stage}: "
        return prefix + self.message


class ConfigError(ZipfBenfordError, ValueError):
    exit_code = 1


class ManifestError(ConfigError):
    pass


class CorpusLoadError(ZipfBenfordError, OSError):
    exit_code = 2


class AnalysisError(ZipfBenfordError, ValueError):
    exit_code = 3


class WindowError(AnalysisError):
    """Rank window is empty, too short, or outside the table."""


class UndefinedCorrelationError(AnalysisError):
    """One of the correlated vectors has zero variance."""
