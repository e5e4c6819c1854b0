"""Max-plus scalars and matrices, tropical permanents and minor signs.

Finite scalars are :class:`fractions.Fraction`; the tropical zero is the
float ``-inf`` (``NEG_INF``).  Python already orders and adds the two
correctly (``Fraction(1) + NEG_INF == NEG_INF``), so no wrapper type is
needed and finite arithmetic never rounds.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

NEG_INF = float("-inf")

Scalar = Union[Fraction, float]

#: Largest size for which optimal permutations are enumerated.
BRUTE_LIMIT = 8


class ShapeError(ValueError):
    """Raised on incompatible or non-square shapes."""


class TooLargeError(ValueError):
    """Raised when an input exceeds an enumeration budget."""


class RequiresFiniteError(ValueError):
    """Raised when an operation needs finite entries and got ``-inf``."""


def to_scalar(x) -> Scalar:
    """Convert ``x`` to an exact tropical scalar.

    Accepts ints, Fractions, floats (converted exactly), Decimals and
    strings such as ``"3/4"``, ``"-1.25"`` or ``"-inf"``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        if x == NEG_INF:
            return NEG_INF
        if math.isnan(x) or math.isinf(x):
            raise ValueError(f"not a max-plus scalar: {x!r}")
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if s.lower() in ("-inf", "-infinity", "-∞"):
            return NEG_INF
        return Fraction(s)
    return Fraction(x)


def is_finite(x: Scalar) -> bool:
    return not isinstance(x, float)


def oplus(*xs: Scalar) -> Scalar:
    """Tropical sum (maximum); the empty sum is ``-inf``."""
    return max(xs, default=NEG_INF)


def otimes(*xs: Scalar) -> Scalar:
    """Tropical product (ordinary sum); the empty product is 0."""
    total: Scalar = Fraction(0)
    for x in xs:
        if x == NEG_INF:
            return NEG_INF
        total += x
    return total


@dataclass(frozen=True)
class TropMatrix:
    """Dense immutable matrix over the max-plus semiring.

    Indexing is 0-based: ``A[i, j]``.
    """

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise ShapeError("shape: ragged rows")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "TropMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls(tuple(tuple(Fraction(0) if i == j else NEG_INF for j in range(n))
                         for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        if not self.entries:
            return (0, 0)
        return (len(self.entries), len(self.entries[0]))

    @property
    def n(self) -> int:
        r, c = self.shape
        if r != c:
            raise ShapeError(f"shape: matrix is {r}x{c}, not square")
        return r

    @property
    def T(self) -> "TropMatrix":
        return TropMatrix(tuple(zip(*self.entries)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        return trop_matmul(self, other)

    def is_finite(self) -> bool:
        return all(is_finite(x) for row in self.entries for x in row)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "TropMatrix":
        return TropMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        return "\n".join(" ".join(format_scalar(x) for x in row) for row in self.entries)


def format_scalar(x: Scalar) -> str:
    if x == NEG_INF:
        return "-inf"
    return str(x)


def trop_matmul(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    """Max-plus product: ``C[i, j] = max_t A[i, t] + B[t, j]``."""
    m, k = A.shape
    k2, n = B.shape
    if k != k2:
        raise ShapeError(f"shape: cannot multiply {m}x{k} by {k2}x{n}")
    cols = list(zip(*B.entries))
    out = []
    for row in A.entries:
        out.append(tuple(
            max((a + b for a, b in zip(row, col) if is_finite(a) and is_finite(b)),
                default=NEG_INF)
            for col in cols))
    return TropMatrix(tuple(out))


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``range(d)`` stored as its image sequence."""

    images: tuple[int, ...]

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return permutation_parity(self.images)

    @property
    def is_even(self) -> bool:
        return self.parity == 0


def permutation_parity(images: Sequence[int]) -> int:
    """Parity of a permutation via cycle decomposition (0 even, 1 odd)."""
    seen = [False] * len(images)
    transpositions = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = images[k]
            length += 1
        transpositions += length - 1
    return transpositions % 2


@lru_cache(maxsize=None)
def _perm_table(d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((p, permutation_parity(p)) for p in itertools.permutations(range(d)))


def _integerize(rows) -> list[list]:
    """Scale finite entries to integers by a common denominator; ``-inf`` -> None.

    Scaling by a positive constant preserves argmax sets, so the result can
    be used for parity classification with fast integer arithmetic.
    """
    den = 1
    for row in rows:
        for x in row:
            if x != NEG_INF and x.denominator != 1:
                den = math.lcm(den, x.denominator)
    return [[None if x == NEG_INF else int(x * den) for x in row] for row in rows]


def _best_permutations(rows) -> tuple[Scalar, list[tuple[int, ...]], set[int]]:
    d = len(rows)
    ints = _integerize(rows)
    best = None
    winners: list[tuple[int, ...]] = []
    parities: set[int] = set()
    for perm, par in _perm_table(d):
        w = 0
        for i, j in enumerate(perm):
            v = ints[i][j]
            if v is None:
                break
            w += v
        else:
            if best is None or w > best:
                best = w
                winners = [perm]
                parities = {par}
            elif w == best:
                winners.append(perm)
                parities.add(par)
    if best is None:
        return NEG_INF, [], set()
    value = sum((rows[i][j] for i, j in enumerate(winners[0])), Fraction(0))
    return value, winners, parities


def trop_permanent(A: TropMatrix, brute_limit: int = BRUTE_LIMIT) -> Scalar:
    """Tropical permanent, i.e. the optimal assignment value of ``A``.

    Uses enumeration up to ``brute_limit`` and a max-weight assignment
    solver above it.
    """
    d = A.n
    if d == 0:
        return Fraction(0)
    if d <= brute_limit:
        return _best_permutations(A.entries)[0]
    return _assignment_permanent(A)


def _assignment_permanent(A: TropMatrix) -> Scalar:
    import numpy as np
    from scipy.optimize import linear_sum_assignment

    ints = _integerize(A.entries)
    finite = [abs(v) for row in ints for v in row if v is not None]
    if not finite:
        return NEG_INF
    d = A.n
    # Float64 is exact for every partial sum below this bound.
    if max(finite) * d >= 2 ** 52:
        raise TooLargeError("too-large: entries too wide for exact assignment solver")
    big = -(max(finite) * d + 1) * (d + 1)
    cost = np.array([[big if v is None else v for v in row] for row in ints], dtype=float)
    r, c = linear_sum_assignment(cost, maximize=True)
    if any(ints[i][j] is None for i, j in zip(r, c)):
        return NEG_INF
    return sum((A.entries[i][j] for i, j in zip(r, c)), Fraction(0))


def optimal_permutations(A: TropMatrix, limit: int = BRUTE_LIMIT) -> list[Permutation]:
    """All permutations attaining the tropical permanent, sorted lexicographically."""
    d = A.n
    if d > limit:
        raise TooLargeError(f"too-large: d={d} exceeds enumeration limit {limit}")
    _, winners, _ = _best_permutations(A.entries)
    return sorted(Permutation(p) for p in winners)


class TropSign(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    SIGN_SINGULAR = "SignSingular"

    def __str__(self):
        return self.value

    @property
    def nonnegative(self) -> bool:
        return self is not TropSign.NEGATIVE


def square_sign(rows, limit: int = BRUTE_LIMIT) -> TropSign:
    """Sign of the tropical permanent of a square grid of scalars."""
    if len(rows) > limit:
        raise TooLargeError(f"too-large: d={len(rows)} exceeds enumeration limit {limit}")
    _, _, parities = _best_permutations(rows)
    if parities == {0}:
        return TropSign.POSITIVE
    if parities == {1}:
        return TropSign.NEGATIVE
    return TropSign.SIGN_SINGULAR


def minor_sign(A: TropMatrix, I: Sequence[int], J: Sequence[int]) -> TropSign:
    """Tropical sign of the minor on rows ``I`` and columns ``J`` (0-based).

    Row and column order follow the sorted index sets, as for classical
    minors.
    """
    I, J = sorted(I), sorted(J)
    if len(I) != len(J) or not I:
        raise ShapeError(f"shape: minor needs |I| = |J| >= 1, got {len(I)} and {len(J)}")
    r, c = A.shape
    if I[0] < 0 or J[0] < 0 or I[-1] >= r or J[-1] >= c:
        raise IndexError("minor index out of range")
    rows = [[A.entries[i][j] for j in J] for i in I]
    return square_sign(rows)


def is_sign_nonsingular(A: TropMatrix) -> bool:
    return square_sign(A.entries) is not TropSign.SIGN_SINGULAR
