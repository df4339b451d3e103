"""Two power-law regimes in one rank table.

Operator-heavy code can bend on a log-log plot: a shallow segment over the
middle ranks and a much steeper tail. Fitting each segment separately
recovers both exponents where a single line would average them.
"""

from zipfbenford import RankWindow, fit_segments, loglog_fit, sample_piecewise_table

table = sample_piecewise_table(200, 10**6, alphas=(1.0, 2.39), breakpoints=(33,))

single = loglog_fit(table, RankWindow(12, 200))
print(f"one line over 12:200   alpha_hat = {single.alpha_hat:.3f}  r = {single.r:.4f}")

for fit in fit_segments(table, (12, 33, 200)):
    print(f"segment {str(fit.window):8s}  alpha_hat = {fit.alpha_hat:.3f}  r = {fit.r:.4f}")
