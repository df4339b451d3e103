"""End to end: synthetic corpus on disk, analysis, and emitted report.

The same steps run from the shell as

    zipfbenford synth --n 3000 --total 300000 --seed 1 --noise --out corpus.txt
    zipfbenford analyze --input corpus.txt --mode natural --out results/
"""

import tempfile
from pathlib import Path

from zipfbenford import AnalysisConfig, CorpusSpec, emit, run
from zipfbenford.cli import main

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    corpus = tmp / "corpus.txt"
    main(["synth", "--n", "3000", "--total", "300000", "--seed", "1", "--noise", "--out", str(corpus)])

    config = AnalysisConfig(breakpoints=(11, 110, None))
    report = run([CorpusSpec("synthetic", str(corpus))], config, out_dir=tmp / "results")
    print(emit(report, "tsv"))

    summary = report.corpora[0]
    print(f"Zipf r over 1:100   = {summary.r_zipf_full:.4f}")
    print(f"Zipf r over 11:110  = {summary.r_zipf_dropped:.4f}")
    print(f"fitted exponent     = {summary.alpha_hat:.3f}")
    print("artifacts:", sorted(p.name for p in (tmp / "results").iterdir()))
