"""Tropical elementary Jacobi matrices and factorization words.

Letters follow the usual 1-based names: ``Letter("lower", i)`` is
``x_i``, ``Letter("barred", i)`` is ``x_{i bar}`` and ``Letter("circled", i)``
is the diagonal factor ``x_{(i)}``.  Matrix entries stay 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import NEG_INF, Scalar, TropMatrix, to_scalar, trop_matmul
from .network import WeightMatrix
from .parametrization import phi
from .positivity import is_tp


class NotTPError(ValueError):
    pass


class Letter(NamedTuple):
    kind: str   # "lower", "barred" or "circled"
    index: int  # 1-based

    def __str__(self):
        prefix = {"lower": "", "barred": "b", "circled": "c"}[self.kind]
        return f"{prefix}{self.index}"

    @classmethod
    def parse(cls, token: str) -> "Letter":
        if token.startswith("b"):
            return cls("barred", int(token[1:]))
        if token.startswith("c"):
            return cls("circled", int(token[1:]))
        return cls("lower", int(token))

    def check(self, n: int) -> None:
        top = n if self.kind == "circled" else n - 1
        if self.kind not in ("lower", "barred", "circled") or not 1 <= self.index <= top:
            raise ValueError(f"bad index: letter {self} invalid for n={n}")


@dataclass(frozen=True)
class Word:
    letters: tuple
    n: int

    def __post_init__(self):
        letters = tuple(Letter.parse(x) if isinstance(x, str) else Letter(*x)
                        for x in self.letters)
        for letter in letters:
            letter.check(self.n)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        return cls(tuple(text.split()), n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def pretty(self) -> str:
        """Unicode rendering: overlined barred letters, runs of circled digits."""
        out = []
        for x in self.letters:
            if x.kind == "circled":
                glyph = chr(0x2460 + x.index - 1) if x.index <= 20 else f"({x.index})"
                if out and out[-1][-1] in _CIRCLED:
                    out[-1] += glyph
                    continue
                out.append(glyph)
            elif x.kind == "barred":
                out.append(f"{x.index}\u0304")
            else:
                out.append(str(x.index))
        return " ".join(out)


_CIRCLED = {chr(0x2460 + k) for k in range(20)} | {")"}


def jacobi_matrix(letter: Letter, s, n: int) -> TropMatrix:
    """Tropical elementary Jacobi matrix of ``letter`` with parameter ``s``."""
    letter = Letter(*letter)
    letter.check(n)
    s = to_scalar(s)
    rows = [[Fraction(0) if i == j else NEG_INF for j in range(n)] for i in range(n)]
    k = letter.index - 1
    if letter.kind == "lower":
        rows[k][k + 1] = s
    elif letter.kind == "barred":
        rows[k + 1][k] = s
    else:
        rows[k][k] = s
    return TropMatrix.from_rows(rows)


def canonical_word(n: int) -> Word:
    """The length-n^2 word: barred layers, circled letters, then lower layers."""
    letters = []
    for k in range(1, n):
        letters += [Letter("barred", m) for m in range(n - k, n)]
    letters += [Letter("circled", m) for m in range(1, n + 1)]
    for k in range(n - 1, 0, -1):
        letters += [Letter("lower", m) for m in range(n - 1, n - k - 1, -1)]
    return Word(tuple(letters), n)


def canonical_labels(n: int) -> list[tuple[int, int]]:
    """0-based weight indices ``(i, j)`` in the order of :func:`weight_sequence`."""
    labels = []
    for k in range(1, n):
        d = n - k
        labels += [(i, i - d) for i in range(d, n)]
    labels += [(i, i) for i in range(n)]
    for k in range(n - 1, 0, -1):
        d = n - k
        labels += [(j - d, j) for j in range(n - 1, d - 1, -1)]
    return labels


def weight_sequence(W: WeightMatrix) -> tuple:
    """Weights of G_n read layer by layer, matching :func:`canonical_word`."""
    return tuple(W.w[i][j] for i, j in canonical_labels(W.n))


def letter_for_weight(i: int, j: int) -> Letter:
    """Letter attached to ``w[i][j]`` (0-based) in the canonical pairing."""
    if i > j:
        return Letter("barred", i)
    if i < j:
        return Letter("lower", j)
    return Letter("circled", i + 1)


def evaluate_word(word: Word, params: Sequence, n: int | None = None) -> TropMatrix:
    """Tropical product of the Jacobi factors of ``word`` with ``params``."""
    n = word.n if n is None else n
    if len(params) != len(word):
        raise ValueError(f"length mismatch: {len(word)} letters, {len(params)} parameters")
    result = TropMatrix.identity(n)
    for letter, s in zip(word, params):
        result = trop_matmul(result, jacobi_matrix(letter, s, n))
    return result


def recover_params(A: TropMatrix) -> tuple:
    """The unique parameters ``s`` with ``evaluate_word(canonical_word(n), s) == A``.

    Only defined on tropically totally positive matrices; on the boundary
    several parameter vectors give the same product, so that case raises.
    """
    if not A.is_finite() or not is_tp(A):
        raise NotTPError(
            "not-tp: matrix is not tropically totally positive, so its factorization "
            "is not unique (e.g. [[1,3],[4,6]] arises from every alpha <= 6)")
    return weight_sequence(phi(A))


def validate_scheme(word: Word) -> bool:
    """Whether ``word`` is a factorization scheme.

    Barred and unbarred subwords must each be reduced words for the
    order-reversing permutation (length n(n-1)/2 and the right product),
    and the circled letters must be each of 1..n exactly once.
    """
    n = word.n
    top = n * (n - 1) // 2
    if len(word) != n * n:
        return False
    reversal = list(range(n - 1, -1, -1))
    for kind in ("barred", "lower"):
        sub = [x.index for x in word if x.kind == kind]
        if len(sub) != top:
            return False
        perm = list(range(n))
        for i in sub:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        if perm != reversal:
            return False
    circled = sorted(x.index for x in word if x.kind == "circled")
    return circled == list(range(1, n + 1))


class CommutationResult(NamedTuple):
    params: tuple
    T: Scalar


def commutation_map(s: Sequence, direction: str = "forward") -> CommutationResult:
    """Tropical commutation move on four parameters.

    Forward rewrites ``x_i(s1) x_(i)(s2) x_(i+1)(s3) x_ibar(s4)`` as
    ``x_ibar(s1') x_(i)(s2') x_(i+1)(s3') x_i(s4')``; backward goes the
    other way.  The move acts only on rows/columns ``i, i+1``, so it does
    not depend on ``i`` or ``n``.
    """
    s1, s2, s3, s4 = (to_scalar(x) for x in s)
    if direction == "forward":
        T = max(s2, s1 + s3 + s4)
        return CommutationResult((s3 + s4 - T, T, s2 + s3 - T, s1 + s3 - T), T)
    if direction == "backward":
        T = max(s3, s1 + s2 + s4)
        return CommutationResult((s2 + s4 - T, s2 + s3 - T, T, s1 + s2 - T), T)
    raise ValueError(f"unknown direction {direction!r}")


def commutation_words(i: int, n: int) -> tuple[Word, Word]:
    """The two words related by :func:`commutation_map` at position ``i`` (1-based)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"bad index: i={i} for n={n}")
    left = Word((Letter("lower", i), Letter("circled", i), Letter("circled", i + 1),
                 Letter("barred", i)), n)
    right = Word((Letter("barred", i), Letter("circled", i), Letter("circled", i + 1),
                  Letter("lower", i)), n)
    return left, right
