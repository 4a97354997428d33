"""
Band counts against R^m / m
===========================

For GP(2,3) the number of bands of length m behaves like C R^m / m with
C = 2 and R the real root of x³ = x + 1.  The ratio table uses exact band
counts; plotting is left to the reader (the rows are plain data).
"""

from stringzeta import analyze, load_corpus

rep = analyze(load_corpus("gp23"), terms=20, pnt_range=(1, 80))
print(f"R = {rep.R:.12f}  C = {rep.C}  L = {rep.L}")
for m, pi, ratio in rep.pnt_table:
    if m % 5 == 0:
        print(f"{m:3d} {pi:>14d} {ratio:.6f}")

# The ratio settles towards 1; the oscillation decays like R^(-m/2).
worst = max(abs(r - 1) for m, _, r in rep.pnt_table if 40 <= m <= 60)
print("max |ratio - 1| on 40..60:", round(worst, 5))
