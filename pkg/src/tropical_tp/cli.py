"""Command-line interface.

Index sets and levels in human-readable output are 1-based.  Exit codes:
0 success, 2 parse/input error, 3 over budget, 4 not tropically totally
positive.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .core import (
    RequiresFiniteError,
    ShapeError,
    TooLargeError,
    TropMatrix,
    format_scalar,
    minor_sign,
)
from .io import DocumentError, format_document, parse_document, to_dot
from .jacobi import NotTPError, canonical_word, recover_params
from .network import (
    NotAPathError,
    WeightMatrix,
    build_canonical,
    inequality_report,
    levels_to_path,
    normalize_path,
    path_to_levels,
    path_weight,
    random_canonical_path,
    transfer_matrix,
)
from .parametrization import MODES, gen_weights, phi
from .positivity import adjacent_2x2_check, classify_oracle
from .puiseux import format_series, k_transfer, lift_weights, val_correspondence_check

EXIT_PARSE, EXIT_BUDGET, EXIT_NOT_TP = 2, 3, 4


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _set(ix) -> str:
    return "{" + ",".join(str(i + 1) for i in ix) + "}"


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise DocumentError(str(exc)) from exc
    return parse_document(text)


def _expect(kind: str, obj, wanted: str):
    if kind != wanted:
        raise DocumentError(f"expected a {wanted} document, got {kind}")
    return obj


def _adjacent_witness(A: TropMatrix, violations):
    i, j = violations[0]
    I, J = (i - 1, i), (j - 1, j)
    return I, J, minor_sign(A, I, J)


def cmd_classify(A: TropMatrix, oracle: bool = False, max_minor: int | None = None) -> dict:
    n = A.n
    t = min(max_minor or n, n)
    result: dict = {"n": n, "max_minor": t, "finite": A.is_finite()}
    fast = A.is_finite() and t == n
    if fast:
        strict = adjacent_2x2_check(A, strict=True)
        weak = adjacent_2x2_check(A, strict=False)
        result.update(tp=strict.ok, tn_finite=weak.ok, tn=weak.ok)
        witness = _adjacent_witness(A, strict.violations) if not strict.ok else None
    if oracle or not fast:
        cls = classify_oracle(A, t)
        if fast:
            result["oracle_agrees"] = (cls.is_tp == result["tp"]
                                       and cls.is_tn_finite == result["tn_finite"])
        result.update(tp=cls.is_tp, tn_finite=cls.is_tn_finite, tn=cls.is_tn,
                      max_t_positive=cls.max_t_positive,
                      max_t_nonnegative=cls.max_t_nonnegative)
        witness = cls.witnesses[0] if cls.witnesses else None
    result["witness"] = None if witness is None else {
        "rows": [i + 1 for i in witness[0]], "cols": [j + 1 for j in witness[1]],
        "sign": str(witness[2])}
    result["_witness"] = witness
    return result


def _classify_text(r: dict) -> list[str]:
    if r["tp"]:
        head = "TP: yes"
    else:
        if r["finite"]:
            head = f"TN(R): {_yes(r['tn_finite'])}, TP: no"
        else:
            head = f"TN: {_yes(r['tn'])}, TP: no"
        w = r["_witness"]
        if w is not None:
            head += f"; witness minor {_set(w[0])}×{_set(w[1])} {w[2]}"
    lines = [head, f"TP: {_yes(r['tp'])}", f"TN(R): {_yes(r['tn_finite'])}",
             f"TN: {_yes(r['tn'])}"]
    if "max_t_positive" in r:
        lines.append(f"TP_t holds up to t = {r['max_t_positive']} (of {r['max_minor']})")
        lines.append(f"TN_t holds up to t = {r['max_t_nonnegative']} (of {r['max_minor']})")
    if "oracle_agrees" in r:
        lines.append(f"oracle agrees with 2x2 check: {_yes(r['oracle_agrees'])}")
    return lines


def cmd_weights(A: TropMatrix) -> tuple[WeightMatrix, object]:
    W = phi(A)
    return W, inequality_report(W)


def cmd_factor(A: TropMatrix) -> tuple[str, tuple]:
    params = recover_params(A)
    return str(canonical_word(A.n)), params


def _run(args) -> int:
    out = []
    fmt = args.format
    if args.command == "classify":
        A = _expect(*_read(args.input), "trop-matrix")
        r = cmd_classify(A, oracle=args.oracle, max_minor=args.max_minor)
        if fmt == "json":
            r.pop("_witness")
            out.append(json.dumps(r))
        else:
            out += _classify_text(r)
    elif args.command == "weights":
        A = _expect(*_read(args.input), "trop-matrix")
        W, rep = cmd_weights(A)
        if fmt == "json":
            d = json.loads(format_document(W, "json"))
            d["inequalities"] = {k: getattr(rep, k) for k in (
                "weak_trapeze", "strict_trapeze", "weak_parallelogram", "strict_parallelogram")}
            out.append(json.dumps(d))
        else:
            out.append(format_document(W))
            out.append(f"# weak trapeze: {_yes(rep.weak_trapeze)}")
            out.append(f"# strict trapeze: {_yes(rep.strict_trapeze)}")
            out.append(f"# weak parallelogram: {_yes(rep.weak_parallelogram)}")
            out.append(f"# strict parallelogram: {_yes(rep.strict_parallelogram)}")
    elif args.command == "transfer":
        kind, obj = _read(args.input)
        if kind == "weight-matrix":
            obj = build_canonical(obj)
        elif kind != "network":
            raise DocumentError(f"expected a weight-matrix or network document, got {kind}")
        out.append(format_document(transfer_matrix(obj), fmt))
    elif args.command == "factor":
        A = _expect(*_read(args.input), "trop-matrix")
        word, params = cmd_factor(A)
        if fmt == "json":
            out.append(json.dumps({"word": word, "params": [format_scalar(p) for p in params]}))
        else:
            out.append(f"{word} / params ({', '.join(format_scalar(p) for p in params)})")
    elif args.command == "lift":
        W = _expect(*_read(args.input), "weight-matrix")
        M = k_transfer(W, lift_weights(W, args.seed))
        rep = val_correspondence_check(W, args.seed)
        if fmt == "json":
            out.append(json.dumps({
                "matrix": [[format_series(x) for x in row] for row in M],
                "entrywise_ok": rep.entrywise_ok, "minors_checked": rep.minors_checked,
                "sign_nonsingular": rep.sign_nonsingular,
                "det_valuation_ok": rep.det_valuation_ok, "det_sign_ok": rep.det_sign_ok,
                "all_minors_positive": rep.all_minors_positive,
                "recovered_ok": rep.recovered_ok}))
        else:
            for i, row in enumerate(M):
                for j, x in enumerate(row):
                    out.append(f"A[{i + 1},{j + 1}] = {format_series(x)}")
            out.append(f"val commutes with transfer: {_yes(rep.entrywise_ok)}")
            out.append(f"minors checked: {rep.minors_checked}, sign-nonsingular: "
                       f"{rep.sign_nonsingular}")
            out.append(f"val(det) = per on sign-nonsingular minors: {_yes(rep.det_valuation_ok)}")
            out.append(f"det sign matches optimal parity: {_yes(rep.det_sign_ok)}")
            if rep.strict:
                out.append(f"all minors positive in K: {_yes(rep.all_minors_positive)}")
                out.append(f"weights recovered from valuation: {_yes(rep.recovered_ok)}")
    elif args.command == "export-dot":
        W = _expect(*_read(args.input), "weight-matrix")
        out.append(to_dot(build_canonical(W)))
    elif args.command == "random":
        out.append(format_document(gen_weights(args.n, args.mode, args.seed), fmt))
    elif args.command == "mutate":
        W = _expect(*_read(args.input), "weight-matrix")
        n = W.n
        if args.levels:
            try:
                path = levels_to_path([int(x) - 1 for x in args.levels.split(",")])
            except ValueError as exc:
                raise DocumentError(f"bad --levels: {exc}") from exc
        else:
            rng = random.Random(args.seed)
            path = random_canonical_path(n, rng, None if args.source is None else args.source - 1)
        rng = random.Random(args.seed) if args.random_order else None
        result, trace = normalize_path(W, path, rng)
        net = build_canonical(W)
        before, after = path_weight(net, path), path_weight(net, result)
        if fmt == "json":
            out.append(json.dumps({
                "path": [l + 1 for l in path_to_levels(path)],
                "result": [l + 1 for l in path_to_levels(result)],
                "trace": [[m.kind, m.column, m.level + 1] for m in trace],
                "weight_before": format_scalar(before), "weight_after": format_scalar(after)}))
        else:
            out.append("path levels: " + " ".join(str(l + 1) for l in path_to_levels(path)))
            for m in trace:
                out.append(f"  {m.kind} at column {m.column}, level {m.level + 1}")
            out.append("result levels: " + " ".join(str(l + 1) for l in path_to_levels(result)))
            out.append(f"weight: {format_scalar(before)} -> {format_scalar(after)}")
    print("\n".join(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropical-tp",
                                description="Tropical total positivity toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a trop-matrix as TP/TN", parents=[common])
    c.add_argument("input")
    c.add_argument("--oracle", action="store_true", help="also run the brute-force minor oracle")
    c.add_argument("--max-minor", type=int, default=None, metavar="T")

    for name, helptext in (("weights", "weight matrix phi(A) of a trop-matrix"),
                           ("transfer", "transfer matrix of a weight-matrix or network"),
                           ("factor", "Jacobi factorization of a TP trop-matrix"),
                           ("export-dot", "DOT graph of G_n for a weight-matrix")):
        sp = sub.add_parser(name, help=helptext, parents=[common])
        sp.add_argument("input")

    c = sub.add_parser("lift", help="lift weights to Puiseux series and check valuations", parents=[common])
    c.add_argument("input")
    c.add_argument("--seed", type=int, default=None)

    c = sub.add_parser("random", help="seeded random weight-matrix", parents=[common])
    c.add_argument("n", type=int)
    c.add_argument("--mode", choices=MODES, default="strict")
    c.add_argument("--seed", type=int, default=0)

    c = sub.add_parser("mutate", help="normalize a path of G_n by mutations", parents=[common])
    c.add_argument("input")
    c.add_argument("--levels", help="comma-separated 1-based levels, one per column")
    c.add_argument("--source", type=int, default=None, help="1-based source of a random path")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--random-order", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except NotTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_TP
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DocumentError, RequiresFiniteError, ShapeError, NotAPathError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
