"""Lifting tropical weights to Puiseux series.

Replace each weight w by a positive series of valuation w.  The classical
transfer matrix of G_n is then totally positive, its entrywise valuation is
the tropical transfer matrix, and on sign-nonsingular minors the valuation
of the determinant is the tropical permanent.
"""

from tropical_tp import canonical_word, gen_weights, k_det, val_correspondence_check
from tropical_tp.puiseux import (
    ONE,
    format_series,
    k_evaluate_word,
    k_transfer,
    k_valuation,
    lift_weights,
    t_power,
)

W = gen_weights(2, "strict", seed=2)
K = k_transfer(W, lift_weights(W, seed=7))
for i, row in enumerate(K):
    for j, x in enumerate(row):
        print(f"A[{i + 1},{j + 1}] = {format_series(x)}")
print("det =", format_series(k_det(K)))
print("valuation:")
print(k_valuation(K))
print()

for n in (2, 3, 4):
    rep = val_correspondence_check(gen_weights(n, "strict", seed=n), seed=n)
    print(f"n={n}: {rep.minors_checked} minors, all positive: {rep.all_minors_positive}, "
          f"val(det) = per: {rep.det_valuation_ok}, weights recovered: {rep.recovered_ok}")
print()

# a totally positive matrix whose valuation sits on the boundary
K = k_evaluate_word(canonical_word(2), [ONE, ONE, t_power(-2), ONE])
print("x(1, 1, t^-2, 1) =", [[format_series(x) for x in row] for row in K])
print("its valuation is", str(k_valuation(K)).splitlines(), "so the t^-2 cannot be read back")
