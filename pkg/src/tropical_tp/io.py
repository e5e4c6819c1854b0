"""Text and JSON documents for matrices and networks, and DOT export.

Matrix document::

    kind: trop-matrix        # or weight-matrix
    rows: 2
    cols: 2
    data:
    1 3
    4 -inf

Scalars are exact: integers, decimals or ``p/q``; ``-inf`` only in a
trop-matrix.  A network document has ``kind: network``, ``sources:`` and
``targets:`` lines (node names, bottom to top) and an ``arcs:`` block with
one ``tail head weight`` triple per line.  Lines starting with ``#`` are
ignored.  A document whose first character is ``{`` is read as JSON with
the same fields (``data`` a list of rows, ``arcs`` a list of triples).
"""

from __future__ import annotations

import json

from .core import NEG_INF, TropMatrix, format_scalar, to_scalar
from .network import Arc, PlanarNetwork, WeightMatrix

KINDS = ("trop-matrix", "weight-matrix", "network")


class DocumentError(ValueError):
    """Malformed input document."""


def _scalar(token, allow_inf: bool):
    try:
        x = to_scalar(token)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DocumentError(f"bad scalar {token!r}") from exc
    if x == NEG_INF and not allow_inf:
        raise DocumentError("-inf is only allowed in a trop-matrix")
    return x


def _parse_text(text: str) -> dict:
    fields: dict = {}
    block = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if sep and key.strip() in ("kind", "rows", "cols", "data", "sources", "targets", "arcs"):
            key = key.strip()
            if key in ("data", "arcs"):
                block = fields.setdefault(key, [])
                if rest.strip():
                    raise DocumentError(f"{key}: block must start on the next line")
            else:
                fields[key] = rest.strip()
                block = None
            continue
        if block is None:
            raise DocumentError(f"unexpected line: {raw!r}")
        block.append(line.split())
    return fields


def parse_document(text: str):
    """Parse a document; returns ``(kind, obj)``."""
    text = text.strip()
    if not text:
        raise DocumentError("empty document")
    if text.startswith("{"):
        try:
            fields = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"bad JSON: {exc}") from exc
        if isinstance(fields.get("sources"), list):
            fields["sources"] = " ".join(map(str, fields["sources"]))
            fields["targets"] = " ".join(map(str, fields.get("targets", [])))
    else:
        fields = _parse_text(text)
    kind = fields.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"kind must be one of {KINDS}, got {kind!r}")
    if kind == "network":
        return kind, _network_from_fields(fields)
    try:
        rows, cols = int(fields["rows"]), int(fields["cols"])
    except (KeyError, ValueError, TypeError) as exc:
        raise DocumentError("rows and cols are required integers") from exc
    data = fields.get("data") or []
    if len(data) != rows or any(len(r) != cols for r in data):
        raise DocumentError(f"data is not a {rows}x{cols} grid")
    grid = [[_scalar(x, kind == "trop-matrix") for x in row] for row in data]
    if kind == "weight-matrix":
        if rows != cols:
            raise DocumentError("weight-matrix must be square")
        return kind, WeightMatrix.from_rows(grid)
    return kind, TropMatrix.from_rows(grid)


def _network_from_fields(fields: dict) -> PlanarNetwork:
    sources = str(fields.get("sources", "")).split()
    targets = str(fields.get("targets", "")).split()
    if not sources or len(sources) != len(targets):
        raise DocumentError("network needs equally many sources and targets")
    arcs = []
    for triple in fields.get("arcs") or []:
        if len(triple) != 3:
            raise DocumentError(f"arc must be 'tail head weight', got {triple!r}")
        tail, head, w = triple
        arcs.append(Arc(str(tail), str(head), _scalar(w, False)))
    try:
        return PlanarNetwork(arcs, sources, targets)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def format_document(obj, fmt: str = "text") -> str:
    """Render a TropMatrix or WeightMatrix as a matrix document."""
    if isinstance(obj, WeightMatrix):
        kind, grid = "weight-matrix", obj.tolist()
    else:
        kind, grid = "trop-matrix", obj.tolist()
    rows = len(grid)
    cols = len(grid[0]) if grid else 0
    if fmt == "json":
        return json.dumps({"kind": kind, "rows": rows, "cols": cols,
                           "data": [[format_scalar(x) for x in r] for r in grid]})
    lines = [f"kind: {kind}", f"rows: {rows}", f"cols: {cols}", "data:"]
    lines += [" ".join(format_scalar(x) for x in r) for r in grid]
    return "\n".join(lines)


def to_dot(net: PlanarNetwork, name: str = "G") -> str:
    """Graphviz DOT text; grid nodes ``(x, l)`` are named ``x_l``.

    Nodes are emitted in column-major order and arcs in construction order,
    so the output is stable.  Unit arcs are unlabelled.
    """

    def node_name(v):
        if isinstance(v, tuple):
            return "_".join(str(x) for x in v)
        return str(v)

    def sort_key(v):
        return (0, v) if isinstance(v, tuple) else (1, (str(v),))

    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    src, tgt = set(net.sources), set(net.targets)
    for v in sorted(net.nodes, key=sort_key):
        attrs = ' shape=box' if v in src or v in tgt else ''
        lines.append(f'  "{node_name(v)}" [label="{node_name(v)}"{attrs}];')
    for a in net.arcs:
        if a.label is not None or a.weight != 0:
            label = format_scalar(a.weight)
            if a.label is not None:
                label = f"w{a.label[0] + 1},{a.label[1] + 1}={label}"
            lines.append(f'  "{node_name(a.tail)}" -> "{node_name(a.head)}" [label="{label}"];')
        else:
            lines.append(f'  "{node_name(a.tail)}" -> "{node_name(a.head)}";')
    lines.append("}")
    return "\n".join(lines)
