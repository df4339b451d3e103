"""Corpus manifests and text loading.

A manifest is a tab-separated file with one corpus per line::

    label <TAB> mode <TAB> [encoding <TAB>] path

Blank lines and lines starting with ``#`` are ignored. Relative paths are
resolved against the manifest's directory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CorpusLoadError, ManifestError

MODES = ("natural", "java", "cpp")

# manifest token -> Python codec
ENCODINGS = {
    "utf8": "utf-8",
    "windows1251": "cp1251",
    "koi8r": "koi8-r",
}


@dataclass(frozen=True)
class CorpusSpec:
    label: str
    path: str
    mode: str = "natural"
    encoding: str = "utf8"

    def __post_init__(self):
        if not self.label:
            raise ManifestError("corpus label must be non-empty")
        if self.mode not in MODES:
            raise ManifestError(f"unknown mode {self.mode!r}; expected one of {', '.join(MODES)}")
        if self.encoding not in ENCODINGS:
            raise ManifestError(
                f"unknown encoding {self.encoding!r}; expected one of {', '.join(ENCODINGS)}"
            )


@dataclass(frozen=True)
class RawText:
    content: str
    source_label: str = ""


def parse_manifest(path) -> list[CorpusSpec]:
    """Read a manifest and return its corpora in file order."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc.strerror or exc}") from exc

    base = os.path.dirname(os.path.abspath(path))
    specs = []
    seen = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) == 3:
            label, mode, corpus_path = fields
            encoding = "utf8"
        elif len(fields) == 4:
            label, mode, encoding, corpus_path = fields
        else:
            raise ManifestError(
                f"{path}:{lineno}: expected 3 or 4 tab-separated fields, got {len(fields)}"
            )
        label, mode, encoding = label.strip(), mode.strip(), encoding.strip()
        if label in seen:
            raise ManifestError(f"{path}:{lineno}: duplicate label {label!r}")
        seen.add(label)
        if not os.path.isabs(corpus_path):
            corpus_path = os.path.join(base, corpus_path)
        try:
            specs.append(CorpusSpec(label, corpus_path, mode, encoding))
        except ManifestError as exc:
            raise ManifestError(f"{path}:{lineno}: {exc.message}") from None
    return specs


def decode_text(data: bytes, encoding: str = "utf8", label: str = "") -> RawText:
    try:
        content = data.decode(ENCODINGS[encoding])
    except UnicodeDecodeError as exc:
        raise CorpusLoadError(
            f"bytes invalid for {encoding} at offset {exc.start}", label=label or None
        ) from exc
    if content.startswith("\ufeff"):
        content = content[1:]
    return RawText(content, label)


def load_corpus(spec: CorpusSpec) -> RawText:
    # Read as bytes so that line endings reach the tokenizer untouched.
    try:
        with open(spec.path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise CorpusLoadError(
            f"cannot read {spec.path}: {exc.strerror or exc}", label=spec.label
        ) from exc
    return decode_text(data, spec.encoding, spec.label)
