"""The maps between weight matrices and transfer matrices, plus seeded generators."""

from __future__ import annotations

import functools
import random
from fractions import Fraction

from .core import RequiresFiniteError, TropMatrix
from .network import WeightMatrix

MODES = ("strict", "weak", "arbitrary")


def psi(W: WeightMatrix) -> TropMatrix:
    """Matrix of uppermost-path weights of G_n.

    ``psi(W)[i][j]`` is ``w[i][i] + ... + w[i][j]`` above the diagonal and
    ``w[j][j] + ... + w[i][j]`` (down column ``j``) below it.
    """
    n, w = W.n, W.w
    a = [[None] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = w[i][i]
        for j in range(i + 1, n):
            a[i][j] = a[i][j - 1] + w[i][j]
            a[j][i] = a[j - 1][i] + w[j][i]
    return TropMatrix(tuple(map(tuple, a)))


def phi(A: TropMatrix) -> WeightMatrix:
    """Inverse of :func:`psi`: consecutive differences along rows/columns.

    ``phi(A)[i][j]`` is ``a[i][j]`` on the diagonal, ``a[i][j] - a[i][j-1]``
    above it and ``a[i][j] - a[i-1][j]`` below it.
    """
    n = A.n
    if not A.is_finite():
        raise RequiresFiniteError("requires-finite: phi needs a finite matrix")
    a = A.entries
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(a[i][j])
            elif i < j:
                row.append(a[i][j] - a[i][j - 1])
            else:
                row.append(a[i][j] - a[i - 1][j])
        rows.append(row)
    return WeightMatrix.from_rows(rows)


@functools.lru_cache(maxsize=None)
def _value_table(base: tuple[int, int], denominator: int) -> tuple:
    return tuple(Fraction(k, denominator) for k in range(base[0], base[1] + 1))


def gen_weights(n: int, mode: str = "strict", seed: int = 0, *,
                gaps: tuple[int, int] | None = None,
                base: tuple[int, int] = (-10, 10),
                denominator: int = 1) -> WeightMatrix:
    """Seeded random weight matrix.

    ``strict`` draws every parallelogram and trapeze gap from ``[1, 10]``,
    ``weak`` from ``[0, 10]`` (so ties occur), and ``arbitrary`` draws each
    entry independently from ``base``.  ``gaps`` overrides the gap range;
    ``gaps=(0, 0)`` puts every inequality on its boundary.  All values are
    integers divided by ``denominator``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(f"weights:{n}:{mode}:{seed}")
    den = Fraction(1, denominator)
    if mode == "arbitrary":
        flat = rng.choices(_value_table(base, denominator), k=n * n)
        return WeightMatrix.from_rows([flat[i * n:(i + 1) * n] for i in range(n)])
    lo, hi = gaps if gaps is not None else ((1, 10) if mode == "strict" else (0, 10))
    w = [[None] * n for _ in range(n)]
    for i in range(1, n):
        # row i left of the diagonal and column i above it increase toward it
        w[i][0] = rng.randint(*base) * den
        for j in range(1, i):
            w[i][j] = w[i][j - 1] + rng.randint(lo, hi) * den
        w[0][i] = rng.randint(*base) * den
        for j in range(1, i):
            w[j][i] = w[j - 1][i] + rng.randint(lo, hi) * den
    w[0][0] = rng.randint(*base) * den
    for i in range(1, n):
        w[i][i] = w[i][i - 1] + w[i - 1][i - 1] + w[i - 1][i] + rng.randint(lo, hi) * den
    return WeightMatrix.from_rows(w)


def gen_matrix(n: int, kind: str = "tp", seed: int = 0, *, denominator: int = 1) -> TropMatrix:
    """Seeded random finite matrix.

    ``tp`` and ``tn`` are images of strict and weak weights; ``near`` is a
    ``tn`` matrix with one entry nudged by +-1 (often just outside TN);
    ``arbitrary`` has independent entries in ``[-10, 10]``.
    """
    if kind == "tp":
        return psi(gen_weights(n, "strict", seed, denominator=denominator))
    if kind == "tn":
        return psi(gen_weights(n, "weak", seed, gaps=(0, 3), denominator=denominator))
    rng = random.Random(f"matrix:{n}:{kind}:{seed}")
    if kind == "arbitrary":
        flat = rng.choices(_value_table((-10, 10), denominator), k=n * n)
        return TropMatrix.from_rows([flat[i * n:(i + 1) * n] for i in range(n)])
    if kind == "near":
        rows = psi(gen_weights(n, "weak", seed, gaps=(0, 3), denominator=denominator)).tolist()
        i, j = rng.randrange(n), rng.randrange(n)
        rows[i][j] += Fraction(rng.choice((-1, 1)), denominator)
        return TropMatrix.from_rows(rows)
    raise ValueError(f"unknown kind {kind!r}")
