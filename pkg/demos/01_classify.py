"""Classifying max-plus matrices.

A finite matrix is tropically totally positive exactly when every adjacent
2x2 minor is strictly "Monge in reverse", and totally nonnegative when the
same holds weakly.  The brute-force oracle looks at every minor and should
always agree.
"""

from tropical_tp import NEG_INF, TropMatrix, classify_oracle, is_tn_finite, is_tp, minor_sign

samples = {
    "interior": [[0, 1], [2, 5]],
    "boundary": [[1, 3], [4, 6]],
    "outside": [[0, 3], [1, 2]],
    "with -inf": [[0, NEG_INF], [0, 0]],
}

for name, rows in samples.items():
    A = TropMatrix.from_rows(rows)
    c = classify_oracle(A)
    print(f"{name}:")
    print(A)
    if A.is_finite():
        print(f"  adjacent check   TP={is_tp(A)}  TN(R)={is_tn_finite(A)}")
    print(f"  full oracle      TP={c.is_tp}  TN(R)={c.is_tn_finite}  TN={c.is_tn}")
    for I, J, sign in c.witnesses:
        print(f"  witness rows {I} cols {J}: {sign}")
    print()

# the determinant-like sign of the full boundary minor: two permutations tie
A = TropMatrix.from_rows(samples["boundary"])
print("sign of the 2x2 minor of the boundary matrix:", minor_sign(A, [0, 1], [0, 1]))
