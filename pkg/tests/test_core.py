import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropical_tp import (
    NEG_INF,
    Permutation,
    ShapeError,
    TooLargeError,
    TropMatrix,
    TropSign,
    minor_sign,
    oplus,
    optimal_permutations,
    otimes,
    trop_matmul,
    trop_permanent,
)
from tropical_tp.core import permutation_parity, to_scalar

from conftest import M, trop_matrices, trop_scalars

inf = NEG_INF


def brute_permanent(rows):
    d = len(rows)
    best = NEG_INF
    for p in itertools.permutations(range(d)):
        best = max(best, otimes(*(rows[i][p[i]] for i in range(d))))
    return best


# -- scalars ---------------------------------------------------------------------

def test_to_scalar_is_exact():
    assert to_scalar(0.1) == Fraction(3602879701896397, 36028797018963968)
    assert to_scalar("3/4") == Fraction(3, 4)
    assert to_scalar("-1.25") == Fraction(-5, 4)
    assert to_scalar("-inf") == NEG_INF
    with pytest.raises(ValueError):
        to_scalar(float("inf"))
    with pytest.raises(ValueError):
        to_scalar(float("nan"))


@given(trop_scalars, trop_scalars, trop_scalars)
def test_semiring_laws(a, b, c):
    assert oplus(a, b) == oplus(b, a)
    assert oplus(oplus(a, b), c) == oplus(a, oplus(b, c))
    assert oplus(a, a) == a
    assert oplus(a, NEG_INF) == a
    assert otimes(otimes(a, b), c) == otimes(a, otimes(b, c))
    assert otimes(a, 0) == a
    assert otimes(a, NEG_INF) == NEG_INF
    assert otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c))


def test_finite_results_stay_fractions():
    x = otimes(Fraction(1, 3), Fraction(2, 3), 5)
    assert isinstance(x, Fraction) and x == 6


# -- matmul ----------------------------------------------------------------------

def test_identity_product():
    A = M([[1, -2, inf], [0, 3, 4], [inf, inf, 7]])
    assert trop_matmul(TropMatrix.identity(3), A) == A
    assert A @ TropMatrix.identity(3) == A


def test_jacobi_times_identity():
    x1 = M([[0, 5], [inf, 0]])
    assert trop_matmul(x1, M([[0, inf], [inf, 0]])) == x1


def test_matmul_hand_example():
    assert trop_matmul(M([[0, 1], [2, 3]]), M([[0, 0], [0, 0]])) == M([[1, 1], [3, 3]])


def test_matmul_shape_error():
    with pytest.raises(ShapeError, match="shape"):
        trop_matmul(M([[0, 1]]), M([[0, 1]]))


@given(trop_matrices(max_n=3), st.data())
def test_matmul_associative(A, data):
    n = A.n
    B = data.draw(trop_matrices(min_n=n, max_n=n))
    C = data.draw(trop_matrices(min_n=n, max_n=n))
    assert (A @ B) @ C == A @ (B @ C)


# -- permanent -------------------------------------------------------------------

def test_permanent_examples():
    assert trop_permanent(M([[0, 1], [2, 5]])) == 5
    for d in range(1, 6):
        assert trop_permanent(TropMatrix.identity(d)) == 0
    assert trop_permanent(M([[inf, 0], [inf, 0]])) == NEG_INF


def test_permanent_non_square():
    with pytest.raises(ShapeError):
        trop_permanent(M([[0, 1]]))


@settings(max_examples=60)
@given(trop_matrices(max_n=5, elements=trop_scalars))
def test_permanent_matches_brute_force(A):
    assert trop_permanent(A) == brute_permanent(A.entries)


def subset_dp_permanent(rows):
    """Assignment value by DP over the set of used columns."""
    d = len(rows)
    best = {0: Fraction(0)}
    for i in range(d):
        nxt = {}
        for mask, val in best.items():
            for j in range(d):
                if not mask & (1 << j) and rows[i][j] != NEG_INF:
                    key = mask | (1 << j)
                    cand = val + rows[i][j]
                    if key not in nxt or cand > nxt[key]:
                        nxt[key] = cand
        best = nxt
    return best.get((1 << d) - 1, NEG_INF)


def test_subset_dp_oracle_agrees_with_enumeration():
    rng = random.Random(3)
    for _ in range(30):
        rows = _random_trop(rng, 5, 5, p_inf=0.3).entries
        assert subset_dp_permanent(rows) == brute_permanent(rows)


@pytest.mark.parametrize("d", [9, 10, 12])
def test_permanent_above_brute_limit_uses_assignment(d):
    rng = random.Random(d)
    rows = [[Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(d)]
            for _ in range(d)]
    rows[0][3] = NEG_INF
    A = M(rows)
    assert trop_permanent(A) == subset_dp_permanent(A.entries)


def test_permanent_assignment_all_infinite_column():
    rows = [[0] * 9 for _ in range(9)]
    for r in rows:
        r[4] = NEG_INF
    assert trop_permanent(M(rows)) == NEG_INF


# -- optimal permutations and signs -----------------------------------------------

def test_optimal_permutations_examples():
    assert optimal_permutations(M([[0, 1], [2, 5]])) == [Permutation((0, 1))]
    assert optimal_permutations(M([[0, 0], [0, 0]])) == [Permutation((0, 1)), Permutation((1, 0))]
    assert optimal_permutations(M([[inf, 0], [0, inf]])) == [Permutation((1, 0))]
    assert optimal_permutations(M([[inf, inf], [0, 0]])) == []


def test_optimal_permutations_too_large():
    with pytest.raises(TooLargeError, match="too-large"):
        optimal_permutations(TropMatrix.identity(9))


@given(st.permutations(range(6)))
def test_parity_matches_inversion_count(p):
    inversions = sum(1 for a, b in itertools.combinations(p, 2) if a > b)
    assert permutation_parity(p) == inversions % 2
    assert Permutation(tuple(p)).is_even == (inversions % 2 == 0)


@settings(max_examples=60)
@given(trop_matrices(max_n=5, elements=trop_scalars))
def test_permanent_is_weight_of_optimal_permutations(A):
    perms = optimal_permutations(A)
    per = trop_permanent(A)
    assert (per == NEG_INF) == (not perms)
    for p in perms:
        assert otimes(*(A[i, j] for i, j in enumerate(p.images))) == per


def test_minor_sign_examples():
    assert minor_sign(M([[0, 1], [2, 5]]), [0, 1], [0, 1]) is TropSign.POSITIVE
    assert minor_sign(M([[0, 0], [0, 0]]), [0, 1], [0, 1]) is TropSign.SIGN_SINGULAR
    assert minor_sign(M([[0, 3], [1, 2]]), [0, 1], [0, 1]) is TropSign.NEGATIVE


def test_one_by_one_minors():
    A = M([[-7, inf]])
    assert minor_sign(A, [0], [0]) is TropSign.POSITIVE
    assert minor_sign(A, [0], [1]) is TropSign.SIGN_SINGULAR


def test_minor_sign_shape_errors():
    A = M([[0, 1], [2, 5]])
    with pytest.raises(ShapeError, match="shape"):
        minor_sign(A, [0, 1], [0])
    with pytest.raises(IndexError):
        minor_sign(A, [0, 2], [0, 1])


@settings(max_examples=80)
@given(trop_matrices(min_n=2, max_n=4, elements=trop_scalars), st.data())
def test_minor_sign_invariant_under_row_and_column_shifts(A, data):
    n = A.n
    c = data.draw(st.fractions(-5, 5, max_denominator=3))
    axis = data.draw(st.sampled_from(["row", "col"]))
    k = data.draw(st.integers(0, n - 1))
    rows = A.tolist()
    for i in range(n):
        for j in range(n):
            if (axis == "row" and i == k) or (axis == "col" and j == k):
                rows[i][j] = otimes(rows[i][j], c)
    B = M(rows)
    full = list(range(n))
    assert minor_sign(A, full, full) is minor_sign(B, full, full)


def _random_trop(rng, m, n, p_inf=0.1):
    return M([[NEG_INF if rng.random() < p_inf else Fraction(rng.randint(-6, 6))
               for _ in range(n)] for _ in range(m)])


def test_rank_factorization_is_singular():
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(2, 5)
        s = rng.randint(1, m - 1)
        F = trop_matmul(_random_trop(rng, m, s), _random_trop(rng, s, m))
        assert minor_sign(F, range(m), range(m)) is TropSign.SIGN_SINGULAR
