"""Factoring a tropically totally positive matrix into Jacobi factors.

Reading the weights of G_n layer by layer gives the parameters of a product
of elementary Jacobi matrices along the canonical word.  On the interior of
the cone the parameters are unique; on the boundary they are not.
"""

from tropical_tp import (
    NotTPError,
    TropMatrix,
    canonical_word,
    commutation_map,
    evaluate_word,
    gen_matrix,
    recover_params,
)
from tropical_tp.jacobi import commutation_words

for n in (1, 2, 3, 4):
    print(f"n={n}: {canonical_word(n)}    {canonical_word(n).pretty()}")
print()

A = gen_matrix(3, "tp", seed=5)
print("A =")
print(A)
s = recover_params(A)
print("parameters:", ", ".join(str(x) for x in s))
print("product reproduces A:", evaluate_word(canonical_word(3), s) == A)
print()

try:
    recover_params(TropMatrix.from_rows([[1, 3], [4, 6]]))
except NotTPError as exc:
    print("boundary matrix:", exc)
print()

s = (1, 5, 2, 3)
r = commutation_map(s)
left, right = commutation_words(1, 2)
print(f"commutation: {left} with {s}  ->  {right} with {tuple(map(str, r.params))}, T={r.T}")
print("same matrix:", evaluate_word(left, s) == evaluate_word(right, r.params))
