from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropical_tp import (
    NEG_INF,
    PuiseuxPoly,
    TooLargeError,
    Word,
    build_canonical,
    canonical_word,
    classify_oracle,
    gen_weights,
    k_det,
    k_transfer,
    k_val,
    t_power,
    transfer_matrix,
    val_correspondence_check,
    weight_sequence,
)
from tropical_tp.puiseux import (
    ONE,
    ZERO,
    k_arith,
    k_evaluate_word,
    k_matmul,
    k_matrix,
    k_positive,
    k_valuation,
    lift_weights,
    parse_series,
    format_series,
    hidden_parameter_example,
)

from conftest import M, Wm

exps = st.fractions(-6, 6, max_denominator=3)
coefs = st.fractions(-5, 5, max_denominator=4)
series = st.lists(st.tuples(coefs, exps), max_size=4).map(
    lambda ts: sum((t_power(e, c) for c, e in ts), ZERO))


def test_arithmetic_examples():
    f = t_power(2) + t_power(-1, 3)
    assert f.as_dict() == {Fraction(2): 1, Fraction(-1): 3}
    assert (f - t_power(2)).as_dict() == {Fraction(-1): 3}
    assert (f * f).as_dict() == {4: 1, 1: 6, -2: 9}
    assert k_arith("neg", f) == -f
    assert k_arith("add", f, -f) == ZERO
    assert k_arith("mul", f, ONE) == f


def test_valuation_and_positivity():
    assert k_val(t_power(3) + t_power(-1, -7)) == 3
    assert k_val(ZERO) == NEG_INF
    assert k_positive(t_power(Fraction(1, 2), 2) - t_power(0, 9))
    assert not k_positive(t_power(0, -1) + t_power(-3, 5))


def test_zero_is_not_positive():
    assert not bool(ZERO)
    with pytest.raises(ValueError):
        ZERO.leading_coefficient()


@settings(max_examples=150)
@given(series, series)
def test_valuation_is_a_morphism(f, g):
    assert k_val(f * g) == k_val(f) + k_val(g)
    if f and g and f.is_positive() and g.is_positive():
        assert k_val(f + g) == max(k_val(f), k_val(g))
        assert (f + g).is_positive() and (f * g).is_positive()
    assert k_val(f + g) <= max(k_val(f), k_val(g))


@given(series)
def test_format_parse_roundtrip(f):
    assert parse_series(format_series(f)) == f


def test_determinant_examples():
    assert k_det(hidden_parameter_example()) == t_power(-2)
    assert k_det(k_matrix([[2, 3], [5, 7]])) == PuiseuxPoly.const(-1)
    assert k_det(k_matrix([[t_power(1)]])) == t_power(1)


def test_counterexample_is_positive_with_singular_valuation():
    K = hidden_parameter_example()
    assert K == k_matrix([[1, 1], [1, ONE + t_power(-2)]])
    assert all(x.is_positive() for row in K for x in row)
    assert k_det(K).is_positive()
    V = k_valuation(K)
    assert V == M([[0, 0], [0, 0]])
    c = classify_oracle(V)
    assert not c.is_tp and c.is_tn_finite


def test_k_transfer_n2():
    K = k_transfer(Wm([[0, 1], [2, 5]]))
    assert K[1][1] == t_power(5) + t_power(3)
    assert K[0][1] == t_power(1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_k_transfer_factors_through_word(n):
    for seed in range(5):
        W = gen_weights(n, "arbitrary", seed)
        lifted = lift_weights(W, seed)
        seq = [lifted[i][j] for i, j in _labels(n)]
        assert k_transfer(W, lifted) == k_evaluate_word(canonical_word(n), seq)


def _labels(n):
    from tropical_tp.jacobi import canonical_labels
    return canonical_labels(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("mode", ["strict", "weak", "arbitrary"])
def test_correspondence(n, mode):
    for seed in range(4):
        W = gen_weights(n, mode, seed)
        rep = val_correspondence_check(W, seed)
        assert rep.ok, rep.failures
        assert k_valuation(k_transfer(W)) == transfer_matrix(build_canonical(W))
        if mode == "strict":
            assert rep.strict and rep.all_minors_positive and rep.recovered_ok


def test_k_matmul_associative_small():
    A = k_matrix([[t_power(1), 2], [0, t_power(-1)]])
    B = k_matrix([[1, t_power(2, -1)], [3, 1]])
    assert k_matmul(k_matmul(A, B), A) == k_matmul(A, k_matmul(B, A))


def test_budgets():
    with pytest.raises(TooLargeError):
        k_transfer(gen_weights(5, "strict", 0))
    with pytest.raises(TooLargeError):
        k_det(k_matrix([[1] * 7] * 7))
