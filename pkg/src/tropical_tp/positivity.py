"""Tropical total positivity and total nonnegativity tests.

Two routes are provided.  The fast route looks only at adjacent 2x2
minors (a Monge-type condition).  :func:`classify_oracle` enumerates every
minor and is used to check the fast route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    RequiresFiniteError,
    ShapeError,
    TooLargeError,
    TropMatrix,
    TropSign,
    square_sign,
)

ORACLE_LIMIT = 6


@dataclass(frozen=True)
class PositivityClass:
    """Outcome of the brute-force minor classification.

    ``max_t_positive`` is the largest ``t`` such that every minor of size at
    most ``t`` is tropically positive (0 if some entry is ``-inf``); same
    for ``max_t_nonnegative``.  ``witnesses`` lists the first failing minor
    for positivity and for nonnegativity as ``(I, J, sign)`` with 0-based
    index tuples.
    """

    n: int
    t: int
    is_tp: bool
    is_tn_finite: bool
    is_tn: bool
    max_t_positive: int
    max_t_nonnegative: int
    witnesses: list = field(default_factory=list)


@dataclass(frozen=True)
class AdjacentCheck:
    ok: bool
    violations: list  # 0-based (i, j) of the lower-right corner


def _require_finite_square(A: TropMatrix) -> int:
    n = A.n
    if not A.is_finite():
        raise RequiresFiniteError("requires-finite: matrix has a -inf entry")
    return n


def adjacent_2x2_check(A: TropMatrix, strict: bool = True) -> AdjacentCheck:
    """Check ``a[i,j] + a[i-1,j-1] > a[i-1,j] + a[i,j-1]`` on adjacent pairs.

    With ``strict=False`` the inequality is ``>=``, i.e. ``-A`` is Monge.
    """
    n = _require_finite_square(A)
    a = A.entries
    bad = []
    for i in range(1, n):
        for j in range(1, n):
            lhs = a[i][j] + a[i - 1][j - 1]
            rhs = a[i - 1][j] + a[i][j - 1]
            if lhs < rhs or (strict and lhs == rhs):
                bad.append((i, j))
    return AdjacentCheck(not bad, bad)


def is_tp(A: TropMatrix) -> bool:
    """Tropical total positivity of a finite square matrix."""
    return adjacent_2x2_check(A, strict=True).ok


def is_tn_finite(A: TropMatrix) -> bool:
    """Membership in TN^trop(R): finite and tropically totally nonnegative."""
    return adjacent_2x2_check(A, strict=False).ok


def iter_minors(n: int, m: int, t: int):
    """Yield ``(k, I, J)`` for all minors of size ``k <= t`` in (size, I, J) order."""
    for k in range(1, min(t, n, m) + 1):
        for I in itertools.combinations(range(n), k):
            for J in itertools.combinations(range(m), k):
                yield k, I, J


def classify_oracle(A: TropMatrix, t: int | None = None) -> PositivityClass:
    """Classify ``A`` by enumerating every minor of size at most ``t``."""
    n = A.n
    if n > ORACLE_LIMIT:
        raise TooLargeError(f"too-large: oracle budget is n <= {ORACLE_LIMIT}, got {n}")
    if t is None:
        t = n
    if t < 1:
        raise ShapeError("shape: t must be >= 1")
    t = min(t, n)
    a = A.entries
    finite = A.is_finite()
    max_pos = 0 if not finite else t
    max_nonneg = t
    pos_witness = neg_witness = None
    for k, I, J in iter_minors(n, n, t):
        if k > max_pos and k > max_nonneg:
            break
        sign = square_sign([[a[i][j] for j in J] for i in I])
        if sign is not TropSign.POSITIVE and pos_witness is None:
            pos_witness = (I, J, sign)
            max_pos = min(max_pos, k - 1)
        if sign is TropSign.NEGATIVE and neg_witness is None:
            neg_witness = (I, J, sign)
            max_nonneg = min(max_nonneg, k - 1)
    witnesses = [w for w in (pos_witness, neg_witness) if w is not None]
    if len(witnesses) == 2 and witnesses[0] == witnesses[1]:
        witnesses.pop()
    is_tn = max_nonneg == t
    return PositivityClass(
        n=n,
        t=t,
        is_tp=finite and max_pos == t,
        is_tn_finite=finite and is_tn,
        is_tn=is_tn,
        max_t_positive=max_pos,
        max_t_nonnegative=max_nonneg,
        witnesses=witnesses,
    )
