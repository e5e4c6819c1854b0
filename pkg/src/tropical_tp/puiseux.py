"""Finitely supported generalized Puiseux series and the valuation map.

A :class:`PuiseuxPoly` is a finite sum ``sum a_k t^b_k`` with rational
coefficients and exponents.  Its valuation is the largest exponent and it
is positive when the leading coefficient is.  Division is not supported.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    NEG_INF,
    Scalar,
    ShapeError,
    TooLargeError,
    TropMatrix,
    TropSign,
    _perm_table,
    square_sign,
    to_scalar,
    trop_permanent,
)
from .jacobi import Letter, Word, recover_params, weight_sequence, NotTPError
from .network import WeightMatrix, all_paths, build_canonical, path_arcs, transfer_matrix
from .positivity import iter_minors

DET_LIMIT = 6
LIFT_LIMIT = 4


class ZeroSeriesError(ValueError):
    pass


def _small(x):
    # integral values are kept as ints internally: hashing and adding them is
    # much cheaper than for Fractions, and they compare equal either way
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class PuiseuxPoly:
    """Immutable finite series; ``terms`` are ``(coefficient, exponent)`` pairs
    with non-zero coefficients and strictly decreasing exponents."""

    terms: tuple = ()

    @classmethod
    def from_dict(cls, d: dict) -> "PuiseuxPoly":
        return cls(tuple((_small(c), _small(e))
                         for e, c in sorted(d.items(), reverse=True) if c != 0))

    @classmethod
    def monomial(cls, coef=1, exp=0) -> "PuiseuxPoly":
        return cls.from_dict({to_scalar(exp): Fraction(coef)})

    @classmethod
    def const(cls, c) -> "PuiseuxPoly":
        return cls.monomial(c, 0)

    def as_dict(self) -> dict:
        return {Fraction(e): Fraction(c) for c, e in self.terms}

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        d = {e: c for c, e in self.terms}
        for c, e in other.terms:
            d[e] = d.get(e, 0) + c
        return PuiseuxPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly(tuple((-c, e) for c, e in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        d: dict = {}
        for (c1, e1), (c2, e2) in itertools.product(self.terms, other.terms):
            e = e1 + e2
            d[e] = d.get(e, 0) + c1 * c2
        return PuiseuxPoly.from_dict(d)

    __rmul__ = __mul__

    def val(self) -> Scalar:
        return Fraction(self.terms[0][1]) if self.terms else NEG_INF

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ZeroSeriesError("zero-series: 0 has no leading coefficient")
        return Fraction(self.terms[0][0])

    def is_positive(self) -> bool:
        return self.leading_coefficient() > 0

    def __str__(self):
        return format_series(self)


def _coerce(x) -> PuiseuxPoly:
    if isinstance(x, PuiseuxPoly):
        return x
    return PuiseuxPoly.const(x)


ZERO = PuiseuxPoly()
ONE = PuiseuxPoly.const(1)


def t_power(exp, coef=1) -> PuiseuxPoly:
    """``coef * t^exp``."""
    return PuiseuxPoly.monomial(coef, exp)


def k_arith(op: str, f: PuiseuxPoly, g: PuiseuxPoly | None = None) -> PuiseuxPoly:
    if op == "add":
        return f + g
    if op == "neg":
        return -f
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def k_val(f: PuiseuxPoly) -> Scalar:
    """Largest exponent of ``f``; ``-inf`` for the zero series."""
    return f.val()


def k_positive(f: PuiseuxPoly) -> bool:
    return f.is_positive()


def format_series(f: PuiseuxPoly) -> str:
    if not f.terms:
        return "0"
    return " + ".join(f"{c}*t^{e}" for c, e in f.terms)


def parse_series(text: str) -> PuiseuxPoly:
    """Inverse of :func:`format_series` (``"c1*t^e1 + c2*t^e2"``)."""
    text = text.strip()
    if text == "0":
        return ZERO
    total = ZERO
    for term in text.split(" + "):
        coef, _, exp = term.partition("*t^")
        total = total + t_power(Fraction(exp), Fraction(coef))
    return total


# -- matrices over K -----------------------------------------------------------

KMatrix = tuple  # tuple of tuples of PuiseuxPoly


def k_matrix(rows) -> KMatrix:
    return tuple(tuple(_coerce(x) for x in row) for row in rows)


def k_identity(n: int) -> KMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def k_matmul(A: KMatrix, B: KMatrix) -> KMatrix:
    if len(A[0]) != len(B):
        raise ShapeError("shape: inner dimensions differ")
    cols = list(zip(*B))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
                 for row in A)


def k_valuation(M: KMatrix) -> TropMatrix:
    """Entrywise valuation."""
    return TropMatrix(tuple(tuple(x.val() for x in row) for row in M))


def k_det(M: KMatrix) -> PuiseuxPoly:
    """Exact determinant by signed permutation expansion."""
    d = len(M)
    if any(len(row) != d for row in M):
        raise ShapeError("shape: determinant needs a square matrix")
    if d > DET_LIMIT:
        raise TooLargeError(f"too-large: determinant budget is n <= {DET_LIMIT}")
    acc: dict = {}
    for perm, parity in _perm_table(d):
        term = ONE
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if not term:
                break
        sign = -1 if parity else 1
        for c, e in term.terms:
            acc[e] = acc.get(e, 0) + sign * c
    return PuiseuxPoly.from_dict(acc)


def k_jacobi(letter: Letter, s, n: int) -> KMatrix:
    """Classical elementary Jacobi matrix over K."""
    letter = Letter(*letter)
    letter.check(n)
    s = _coerce(s)
    rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    k = letter.index - 1
    if letter.kind == "lower":
        rows[k][k + 1] = s
    elif letter.kind == "barred":
        rows[k + 1][k] = s
    else:
        rows[k][k] = s
    return tuple(tuple(r) for r in rows)


def k_evaluate_word(word: Word, params: Sequence) -> KMatrix:
    """Classical product of Jacobi factors over K."""
    if len(params) != len(word):
        raise ValueError(f"length mismatch: {len(word)} letters, {len(params)} parameters")
    result = k_identity(word.n)
    for letter, s in zip(word, params):
        result = k_matmul(result, k_jacobi(letter, s, word.n))
    return result


def lift_weights(W: WeightMatrix, seed: int | None = None) -> list[list[PuiseuxPoly]]:
    """Lift each weight ``w`` to a positive series of valuation ``w``.

    Without a seed the lift is the monomial ``t^w``; with a seed the
    coefficient is a random positive rational and a lower-order term may
    be added.
    """
    if seed is None:
        return [[t_power(x) for x in row] for row in W.w]
    rng = random.Random(f"lift:{seed}")
    out = []
    for row in W.w:
        lifted = []
        for x in row:
            f = t_power(x, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
            if rng.random() < 0.5:
                f = f + t_power(x - rng.randint(1, 5), rng.randint(-9, 9))
            lifted.append(f)
        out.append(lifted)
    return out


def k_transfer(W: WeightMatrix, lifted: list[list[PuiseuxPoly]] | None = None) -> KMatrix:
    """Classical transfer matrix of G_n with K-valued weights, by path enumeration."""
    n = W.n
    if n > LIFT_LIMIT:
        raise TooLargeError(f"too-large: lift budget is n <= {LIFT_LIMIT}")
    if lifted is None:
        lifted = lift_weights(W)
    net = build_canonical(W)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = ZERO
            for path in all_paths(net, i, j):
                term = ONE
                for a in path_arcs(net, path):
                    if a.label is not None:
                        term = term * lifted[a.label[0]][a.label[1]]
                total = total + term
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass
class CorrespondenceReport:
    n: int
    entrywise_ok: bool
    minors_checked: int = 0
    sign_nonsingular: int = 0
    det_valuation_ok: bool = True
    det_sign_ok: bool = True
    strict: bool = False
    all_minors_positive: bool | None = None
    recovered_ok: bool | None = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.entrywise_ok and self.det_valuation_ok and self.det_sign_ok
                and self.all_minors_positive is not False and self.recovered_ok is not False)


def val_correspondence_check(W: WeightMatrix, seed: int | None = None) -> CorrespondenceReport:
    """Compare the lifted classical transfer matrix with its tropical shadow.

    Checks that valuation commutes with the transfer matrix, that
    ``val(det) = per`` with matching sign on every sign-nonsingular minor,
    and, for strictly admissible weights, that every minor is positive and
    the weights are recovered from the valuation alone.
    """
    from .network import inequality_report

    n = W.n
    if n > LIFT_LIMIT:
        raise TooLargeError(f"too-large: lift budget is n <= {LIFT_LIMIT}")
    M = k_transfer(W, lift_weights(W, seed))
    V = k_valuation(M)
    A = transfer_matrix(build_canonical(W))
    report = CorrespondenceReport(n=n, entrywise_ok=(V == A))
    if not report.entrywise_ok:
        report.failures.append(("entrywise", None, None))
    report.strict = inequality_report(W).strict
    all_pos = True
    for _, I, J in iter_minors(n, n, n):
        sub = tuple(tuple(M[i][j] for j in J) for i in I)
        det = k_det(sub)
        report.minors_checked += 1
        if not det or not det.is_positive():
            all_pos = False
        sign = square_sign([[A[i, j] for j in J] for i in I])
        if sign is TropSign.SIGN_SINGULAR:
            continue
        report.sign_nonsingular += 1
        per = trop_permanent(A.submatrix(I, J))
        if det.val() != per:
            report.det_valuation_ok = False
            report.failures.append(("val-det", I, J))
        if not det or det.is_positive() != (sign is TropSign.POSITIVE):
            report.det_sign_ok = False
            report.failures.append(("sign", I, J))
    if report.strict:
        report.all_minors_positive = all_pos
        try:
            report.recovered_ok = recover_params(V) == weight_sequence(W)
        except NotTPError:
            report.recovered_ok = False
        if not report.recovered_ok:
            report.failures.append(("recover", None, None))
    return report


def hidden_parameter_example(a=2) -> KMatrix:
    """``x(1, 1, t^-a, 1)`` on the canonical 2x2 word: ``[[1, 1], [1, 1 + t^-a]]``."""
    from .jacobi import canonical_word

    return k_evaluate_word(canonical_word(2), [ONE, ONE, t_power(-to_scalar(a)), ONE])

