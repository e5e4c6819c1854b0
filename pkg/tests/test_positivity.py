import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropical_tp import (
    NEG_INF,
    RequiresFiniteError,
    TooLargeError,
    TropMatrix,
    TropSign,
    adjacent_2x2_check,
    classify_oracle,
    gen_matrix,
    gen_weights,
    is_tn_finite,
    is_tp,
    psi,
)

from conftest import M, trop_matrices, trop_scalars


def test_adjacent_check_examples():
    assert adjacent_2x2_check(M([[0, 1], [2, 5]]), strict=True).ok
    zeros = M([[0, 0], [0, 0]])
    strict = adjacent_2x2_check(zeros, strict=True)
    assert not strict.ok and strict.violations == [(1, 1)]
    assert adjacent_2x2_check(zeros, strict=False).ok


def test_adjacent_check_on_image_of_strict_weights():
    W = gen_weights(3, "strict", seed=0)
    A = psi(W)
    assert adjacent_2x2_check(A, strict=True).ok
    assert classify_oracle(A).is_tp


def test_adjacent_check_hand_matrix():
    # psi of [[0,1,1],[1,3,2],[1,3,9]] worked out by hand
    A = M([[0, 1, 2], [1, 3, 5], [2, 6, 9]])
    assert psi_of([[0, 1, 1], [1, 3, 2], [1, 3, 9]]) == A
    assert adjacent_2x2_check(A, strict=True).ok
    assert classify_oracle(A).is_tp


def psi_of(rows):
    from tropical_tp import WeightMatrix
    return psi(WeightMatrix.from_rows(rows))


def test_adjacent_check_requires_finite():
    with pytest.raises(RequiresFiniteError, match="requires-finite"):
        adjacent_2x2_check(M([[0, NEG_INF], [0, 0]]))


def test_oracle_examples(boundary_matrix):
    c = classify_oracle(M([[0, 1], [2, 5]]), 2)
    assert c.is_tp and c.is_tn_finite and c.is_tn
    c = classify_oracle(M([[0, 0], [0, 0]]), 2)
    assert not c.is_tp and c.is_tn_finite
    c = classify_oracle(boundary_matrix, 2)
    assert not c.is_tp and c.is_tn_finite
    assert c.max_t_positive == 1 and c.max_t_nonnegative == 2
    assert c.witnesses == [((0, 1), (0, 1), TropSign.SIGN_SINGULAR)]


def test_wrappers_on_boundary_matrix(boundary_matrix):
    assert not is_tp(boundary_matrix)
    assert is_tn_finite(boundary_matrix)
    assert is_tp(M([[0, 1], [2, 5]]))


def test_oracle_negative_witness():
    c = classify_oracle(M([[0, 3], [1, 2]]))
    assert not c.is_tn and c.max_t_nonnegative == 1
    assert c.witnesses[-1] == ((0, 1), (0, 1), TropSign.NEGATIVE)


def test_oracle_with_infinite_entries():
    c = classify_oracle(M([[0, NEG_INF], [0, 0]]))
    assert not c.is_tp and not c.is_tn_finite and c.is_tn
    assert c.max_t_positive == 0
    assert c.witnesses[0] == ((0,), (1,), TropSign.SIGN_SINGULAR)
    c = classify_oracle(M([[NEG_INF, 0], [0, NEG_INF]]))
    assert not c.is_tn


def test_oracle_budget():
    with pytest.raises(TooLargeError, match="too-large"):
        classify_oracle(TropMatrix.identity(7))


def test_class_invariants_chain():
    for kind in ("tp", "tn", "near", "arbitrary"):
        for seed in range(20):
            c = classify_oracle(gen_matrix(4, kind, seed))
            assert not c.is_tp or c.is_tn_finite
            assert not c.is_tn_finite or c.is_tn
            assert c.max_t_positive <= c.max_t_nonnegative <= c.n


@settings(max_examples=150, deadline=None)
@given(trop_matrices(max_n=4))
def test_fast_checks_agree_with_oracle(A):
    c = classify_oracle(A)
    assert is_tp(A) == c.is_tp
    assert is_tn_finite(A) == c.is_tn_finite


@settings(max_examples=60, deadline=None)
@given(trop_matrices(max_n=4, elements=trop_scalars))
def test_monotone_in_t(A):
    levels = [classify_oracle(A, t) for t in range(1, A.n + 1)]
    tp_flags = [c.max_t_positive == c.t for c in levels]
    tn_flags = [c.is_tn for c in levels]
    assert tp_flags == sorted(tp_flags, reverse=True)
    assert tn_flags == sorted(tn_flags, reverse=True)


@settings(max_examples=100, deadline=None)
@given(trop_matrices(max_n=5))
def test_tp_closed_under_transpose(A):
    assert is_tp(A) == is_tp(A.T)
    assert is_tn_finite(A) == is_tn_finite(A.T)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("seed", range(5))
def test_image_of_strict_weights_is_tp(n, seed):
    A = psi(gen_weights(n, "strict", seed))
    assert is_tp(A)
    assert classify_oracle(A).is_tp
