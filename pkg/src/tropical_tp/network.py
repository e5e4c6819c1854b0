"""Planar networks, tropical transfer matrices and the canonical network G_n.

Everything here is 0-based.  The canonical network on ``n`` levels has
nodes ``(column, level)`` with ``column`` in ``0..2n-1`` and ``level`` in
``0..n-1`` (level 0 at the bottom).  Column transitions are:

* ``c = 0..n-2``: left layers, horizontal arcs plus descending arcs
  ``(c, l) -> (c+1, l-1)`` of weight ``w[l][l-d]`` where ``d = n-1-c``;
* ``c = n-1``: the middle, horizontal arcs ``(c, l) -> (c+1, l)`` of
  weight ``w[l][l]``;
* ``c = n..2n-2``: right layers, horizontal arcs plus ascending arcs
  ``(c, l-1) -> (c+1, l)`` of weight ``w[l-d][l]`` where ``d = c-n+1``.

Unlabelled arcs carry the tropical unit 0.
"""

from __future__ import annotations

import graphlib
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, NamedTuple, Sequence

from .core import NEG_INF, Scalar, ShapeError, TooLargeError, TropMatrix, to_scalar

CONNECTIVITY_LIMIT = 5


class CyclicError(ValueError):
    pass


class DisconnectedError(ValueError):
    pass


class NotAPathError(ValueError):
    pass


class Arc(NamedTuple):
    tail: Hashable
    head: Hashable
    weight: Scalar
    label: tuple | None = None  # (i, j) when the arc carries w[i][j]


@dataclass(frozen=True)
class WeightMatrix:
    """Finite n x n matrix of weights ``w[i][j]`` of the canonical network."""

    w: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in self.w)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ShapeError("shape: weight matrix must be square")
        if any(isinstance(x, float) for r in rows for x in r):
            raise ValueError("requires-finite: weights must be finite")
        object.__setattr__(self, "w", rows)

    @classmethod
    def from_rows(cls, rows) -> "WeightMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.w)

    def __getitem__(self, ij):
        i, j = ij
        return self.w[i][j]

    def __iter__(self):
        return iter(self.w)

    def replace(self, i: int, j: int, value) -> "WeightMatrix":
        rows = [list(r) for r in self.w]
        rows[i][j] = value
        return WeightMatrix.from_rows(rows)

    def tolist(self):
        return [list(r) for r in self.w]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.w)


class PlanarNetwork:
    """Weighted acyclic digraph with ordered sources and targets (bottom to top).

    Planarity is trusted; acyclicity is checked on construction.
    """

    def __init__(self, arcs: Sequence[Arc], sources: Sequence, targets: Sequence,
                 nodes: Sequence | None = None):
        self.arcs = tuple(Arc(a.tail, a.head, to_scalar(a.weight), *a[3:]) if isinstance(a, Arc)
                          else Arc(a[0], a[1], to_scalar(a[2]), *a[3:]) for a in arcs)
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        if set(self.sources) & set(self.targets):
            raise ValueError("sources and targets must be disjoint")
        seen = dict.fromkeys(nodes or ())
        for node in itertools.chain(self.sources, self.targets):
            seen.setdefault(node)
        for a in self.arcs:
            seen.setdefault(a.tail)
            seen.setdefault(a.head)
        self.nodes = tuple(seen)
        self.out_arcs: dict = {v: [] for v in self.nodes}
        for a in self.arcs:
            self.out_arcs[a.tail].append(a)
        sorter = graphlib.TopologicalSorter({v: [] for v in self.nodes})
        for a in self.arcs:
            sorter.add(a.head, a.tail)
        try:
            self.order = tuple(sorter.static_order())
        except graphlib.CycleError as exc:
            raise CyclicError("cyclic: network has a directed cycle") from exc

    def __repr__(self):
        return (f"PlanarNetwork({len(self.nodes)} nodes, {len(self.arcs)} arcs, "
                f"{len(self.sources)} sources, {len(self.targets)} targets)")

    def _longest_from(self, source) -> tuple[dict, dict]:
        best = {source: Fraction(0)}
        count = {source: 1}
        for v in self.order:
            if v not in best:
                continue
            for a in self.out_arcs[v]:
                if a.weight == NEG_INF:
                    continue
                w = best[v] + a.weight
                cur = best.get(a.head)
                if cur is None or w > cur:
                    best[a.head] = w
                    count[a.head] = count[v]
                elif w == cur:
                    count[a.head] += count[v]
        return best, count

    def transfer_matrix(self) -> TropMatrix:
        return transfer_matrix(self)


def transfer_matrix(net: PlanarNetwork) -> TropMatrix:
    """Tropical transfer matrix: best path weight from each source to each target."""
    rows = []
    for s in net.sources:
        best, _ = net._longest_from(s)
        rows.append(tuple(best.get(t, NEG_INF) for t in net.targets))
    return TropMatrix(tuple(rows))


def count_optimal_paths(net: PlanarNetwork, i: int, j: int) -> int:
    """Number of distinct maximum-weight paths from source ``i`` to target ``j``."""
    best, count = net._longest_from(net.sources[i])
    t = net.targets[j]
    if t not in best:
        raise DisconnectedError(f"disconnected: no path from source {i} to target {j}")
    return count[t]


def all_paths(net: PlanarNetwork, i: int, j: int):
    """Enumerate every path (as a node tuple) from source ``i`` to target ``j``."""
    target = net.targets[j]

    def walk(v, prefix):
        if v == target:
            yield prefix
            return
        for a in net.out_arcs[v]:
            yield from walk(a.head, prefix + (a.head,))

    start = net.sources[i]
    yield from walk(start, (start,))


def path_arcs(net: PlanarNetwork, path: Sequence) -> list[Arc]:
    """Arcs along a node sequence; raises :class:`NotAPathError` if an arc is missing."""
    arcs = []
    for u, v in zip(path, path[1:]):
        for a in net.out_arcs.get(u, ()):
            if a.head == v:
                arcs.append(a)
                break
        else:
            raise NotAPathError(f"not-a-path: no arc {u!r} -> {v!r}")
    return arcs


def path_weight(net: PlanarNetwork, path: Sequence) -> Scalar:
    return sum((a.weight for a in path_arcs(net, path)), Fraction(0))


# -- canonical network ---------------------------------------------------------

def build_canonical(W: WeightMatrix) -> PlanarNetwork:
    """The canonical totally connected planar network G_n with weights ``W``."""
    n = W.n
    if n < 1:
        raise ShapeError("shape: n must be >= 1")
    w = W.w
    zero = Fraction(0)
    arcs = []
    for c in range(2 * n - 1):
        for l in range(n):
            if c == n - 1:
                arcs.append(Arc((c, l), (c + 1, l), w[l][l], (l, l)))
            else:
                arcs.append(Arc((c, l), (c + 1, l), zero))
        if c < n - 1:
            d = n - 1 - c
            for l in range(d, n):
                arcs.append(Arc((c, l), (c + 1, l - 1), w[l][l - d], (l, l - d)))
        elif c > n - 1:
            d = c - n + 1
            for l in range(d, n):
                arcs.append(Arc((c, l - 1), (c + 1, l), w[l - d][l], (l - d, l)))
    nodes = [(c, l) for c in range(2 * n) for l in range(n)]
    return PlanarNetwork(arcs, [(0, l) for l in range(n)],
                         [(2 * n - 1, l) for l in range(n)], nodes=nodes)


def levels_to_path(levels: Sequence[int]) -> tuple:
    return tuple((c, l) for c, l in enumerate(levels))


def path_to_levels(path: Sequence) -> list[int]:
    return [l for _, l in path]


def uppermost_levels(n: int, i: int, j: int) -> list[int]:
    """Level sequence of the uppermost path from source ``i`` to target ``j`` in G_n."""
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"index out of range for n={n}: ({i}, {j})")
    if i <= j:
        return [i] * (n + 1) + [min(i + 1 + m, j) for m in range(n - 1)]
    start = n - 1 - (i - j)
    return [i if x <= start else max(i - (x - start), j) for x in range(n)] + [j] * n


def uppermost_path(n: int, i: int, j: int) -> tuple:
    return levels_to_path(uppermost_levels(n, i, j))


def uppermost_weight(W: WeightMatrix, i: int, j: int) -> Scalar:
    """Weight of the uppermost path: ``sum(w[i][i..j])`` or ``sum(w[j..i][j])``."""
    n = W.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"index out of range for n={n}: ({i}, {j})")
    if i <= j:
        return sum(W.w[i][i:j + 1], Fraction(0))
    return sum((W.w[t][j] for t in range(j, i + 1)), Fraction(0))


# -- trapeze / parallelogram inequalities -------------------------------------

class Violation(NamedTuple):
    kind: str   # "trapeze", "parallelogram-row" or "parallelogram-col"
    i: int
    j: int
    weak: bool  # True if even the non-strict inequality fails


@dataclass(frozen=True)
class InequalityReport:
    weak_trapeze: bool
    strict_trapeze: bool
    weak_parallelogram: bool
    strict_parallelogram: bool
    violations: list

    @property
    def weak(self) -> bool:
        return self.weak_trapeze and self.weak_parallelogram

    @property
    def strict(self) -> bool:
        return self.strict_trapeze and self.strict_parallelogram


def inequality_report(W: WeightMatrix) -> InequalityReport:
    """Evaluate the trapeze and parallelogram inequalities on ``W``.

    Violations are keyed by the larger side of each inequality:
    ``("trapeze", i, i)`` compares ``w[i][i]`` with
    ``w[i][i-1] + w[i-1][i-1] + w[i-1][i]``; ``("parallelogram-row", i, j)``
    compares ``w[i][j-1] < w[i][j]`` (``j < i``) and
    ``("parallelogram-col", i, j)`` compares ``w[i-1][j] < w[i][j]`` (``i < j``).
    """
    w = W.w
    n = W.n
    out = []

    def check(kind, i, j, big, small):
        if big <= small:
            out.append(Violation(kind, i, j, big < small))

    for i in range(1, n):
        check("trapeze", i, i, w[i][i], w[i][i - 1] + w[i - 1][i - 1] + w[i - 1][i])
    for i in range(1, n):
        for j in range(1, i):
            check("parallelogram-row", i, j, w[i][j], w[i][j - 1])
            check("parallelogram-col", j, i, w[j][i], w[j - 1][i])
    trap = [v for v in out if v.kind == "trapeze"]
    para = [v for v in out if v.kind != "trapeze"]
    return InequalityReport(
        weak_trapeze=not any(v.weak for v in trap),
        strict_trapeze=not trap,
        weak_parallelogram=not any(v.weak for v in para),
        strict_parallelogram=not para,
        violations=out,
    )


# -- path mutations ------------------------------------------------------------

class Mutation(NamedTuple):
    kind: str    # "trapeze", "parallelogram-left" or "parallelogram-right"
    column: int  # column whose level changes (first one for trapeze)
    level: int   # upper level of the moved arc


def _applicable_mutations(n: int, lv: Sequence[int]) -> list[Mutation]:
    found = []
    for x in range(1, n - 1):
        if lv[x - 1] == lv[x] + 1 and lv[x + 1] == lv[x]:
            found.append(Mutation("parallelogram-left", x, lv[x - 1]))
    if n >= 2:
        l = lv[n - 2]
        if lv[n - 1] == lv[n] == l - 1 and lv[n + 1] == l:
            found.append(Mutation("trapeze", n - 1, l))
    for x in range(n + 1, 2 * n - 1):
        if lv[x - 1] == lv[x] and lv[x + 1] == lv[x] + 1:
            found.append(Mutation("parallelogram-right", x, lv[x + 1]))
    return found


def _apply(lv: list[int], m: Mutation) -> None:
    if m.kind == "trapeze":
        lv[m.column] = lv[m.column + 1] = m.level
    else:
        lv[m.column] = m.level


def normalize_path(W: WeightMatrix, path: Sequence, rng: random.Random | None = None):
    """Push a source-target path of G_n up to the uppermost path by local mutations.

    Parallelogram mutations move a diagonal arc one layer toward the middle;
    a trapeze mutation replaces descend/middle/ascend around the middle by
    the middle arc one level up.  The leftmost applicable mutation is taken
    unless ``rng`` is given, in which case one is picked at random.

    Returns ``(path, trace)`` where ``trace`` lists the applied mutations.
    """
    n = W.n
    net = build_canonical(W)
    path = tuple(path)
    if len(path) != 2 * n or path[0] not in net.sources or path[-1] not in net.targets:
        raise NotAPathError("not-a-path: must run from a source to a target of G_n")
    path_arcs(net, path)
    lv = path_to_levels(path)
    trace = []
    while True:
        options = _applicable_mutations(n, lv)
        if not options:
            break
        m = rng.choice(options) if rng is not None else options[0]
        _apply(lv, m)
        trace.append(m)
    return levels_to_path(lv), trace


def random_canonical_path(n: int, rng: random.Random, i: int | None = None) -> tuple:
    """Random source-target path in G_n (each step uniform among available arcs)."""
    lv = [rng.randrange(n) if i is None else i]
    for c in range(2 * n - 1):
        l = lv[-1]
        moves = [l]
        if c < n - 1 and l >= n - 1 - c:
            moves.append(l - 1)
        elif c > n - 1 and l + 1 < n and l + 1 >= c - n + 1:
            moves.append(l + 1)
        lv.append(rng.choice(moves))
    return levels_to_path(lv)


# -- total connectivity --------------------------------------------------------

def is_totally_connected(net: PlanarNetwork) -> bool:
    """True iff every equal-size source/target subset pair has vertex-disjoint paths."""
    import networkx as nx

    n = len(net.sources)
    if n != len(net.targets):
        raise ShapeError("shape: need as many sources as targets")
    if n > CONNECTIVITY_LIMIT:
        raise TooLargeError(f"too-large: connectivity budget is n <= {CONNECTIVITY_LIMIT}")
    base = nx.DiGraph()
    for v in net.nodes:
        base.add_edge(("in", v), ("out", v), capacity=1)
    for a in net.arcs:
        if a.weight != NEG_INF:
            base.add_edge(("out", a.tail), ("in", a.head), capacity=1)
    for k in range(1, n + 1):
        for I in itertools.combinations(range(n), k):
            for J in itertools.combinations(range(n), k):
                g = base.copy()
                for i in I:
                    g.add_edge("S", ("in", net.sources[i]), capacity=1)
                for j in J:
                    g.add_edge(("out", net.targets[j]), "T", capacity=1)
                if nx.maximum_flow_value(g, "S", "T") < k:
                    return False
    return True


def random_planar_network(n: int, columns: int, seed: int, keep: float = 0.7,
                          weight_range: tuple[int, int] = (-5, 5)) -> PlanarNetwork:
    """Random layered planar network on an ``n``-level grid.

    Each transition keeps each horizontal arc with probability ``keep`` and,
    between two adjacent levels, at most one of the two diagonals, so no two
    arcs cross.
    """
    rng = random.Random(seed)
    lo, hi = weight_range
    arcs = []
    for c in range(columns):
        for l in range(n):
            if rng.random() < keep:
                arcs.append(Arc((c, l), (c + 1, l), Fraction(rng.randint(lo, hi))))
        for l in range(n - 1):
            r = rng.random()
            if r < keep / 2:
                arcs.append(Arc((c, l), (c + 1, l + 1), Fraction(rng.randint(lo, hi))))
            elif r < keep:
                arcs.append(Arc((c, l + 1), (c + 1, l), Fraction(rng.randint(lo, hi))))
    nodes = [(c, l) for c in range(columns + 1) for l in range(n)]
    return PlanarNetwork(arcs, [(0, l) for l in range(n)],
                         [(columns, l) for l in range(n)], nodes=nodes)


def example_network(alpha) -> PlanarNetwork:
    """The small two-source network with weights 3, alpha, 2, 1.

    Its transfer matrix is ``[[1, 3], [4, max(6, alpha)]]``.
    """
    arcs = [
        Arc("s0", "a", 0),
        Arc("s1", "a", 3),
        Arc("s1", "t1", alpha),
        Arc("a", "b", 1),
        Arc("b", "t1", 2),
        Arc("b", "t0", 0),
    ]
    return PlanarNetwork(arcs, ["s0", "s1"], ["t0", "t1"])
