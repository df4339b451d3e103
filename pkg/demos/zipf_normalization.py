"""Where the predicted Zipf column comes from.

The reference curve is f(n) = C / n**alpha with C chosen so the N predicted
frequencies sum to one. For a large vocabulary C is small; for a short
program with a few hundred distinct lexemes it is noticeably larger.
"""

import numpy as np

from zipfbenford import zipf_curve

for n_ranks in (34136, 863, 100):
    curve = zipf_curve(n_ranks, alpha=1.0)
    head = curve.predicted(np.arange(1, 6))
    print(f"N={n_ranks:6d}  C={curve.C:.4f}  first five: {np.round(head, 4)}")

# a steeper exponent concentrates more mass at the top ranks
for alpha in (0.8, 1.0, 1.25, 2.39):
    curve = zipf_curve(1000, alpha)
    top10 = curve.predicted(np.arange(1, 11)).sum()
    print(f"alpha={alpha:4.2f}  share of the top 10 ranks: {top10:.3f}")
