"""Command line interface: ``connect4 <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 size guard exceeded.
"""

import argparse
import json
import random
import sys

from .connect4gb import SlicedInstance, check_interpolation, membership_check, reduce_to_psi
from .decomposition import (
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_SIZE,
    build_iterated_graph,
    count_admissible_subgraphs,
    decomposition_number,
    enumerate_decompositions,
)
from .errors import Connect4Error, InternalReductionFailure, SizeLimitExceeded, ValidationError
from .fields import QQ, parse_field
from .generators import random_instance, random_point_set
from .pointset import PointSet, intersect_ideals_gb, slice_points, vanishing_ideal_gb
from .staircase import StandardSet, connect_four_add
from .stratum import dimension_vs_nr, report, stratum_table

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


class _Failed(Exception):
    """Raised after output has been written when a verification failed."""


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None


def _load_staircase(path):
    return StandardSet.from_json(_load(path))


def _guard(args, dim, size):
    if dim > args.max_dim:
        raise SizeLimitExceeded(f"dimension {dim} exceeds --max-dim {args.max_dim}")
    if size > args.max_size:
        raise SizeLimitExceeded(f"size {size} exceeds --max-size {args.max_size}")


def _field(args, default=QQ):
    return parse_field(args.field) if args.field else default


def _emit(args, obj, table=None, dot=None):
    if args.output == "dot":
        if dot is None:
            raise ValidationError("this command has no DOT output")
        sys.stdout.write(dot)
    elif args.output == "table" and table is not None:
        sys.stdout.write(table if table.endswith("\n") else table + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _rows(header, rows):
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = []
    for r in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_add(args):
    a = _load_staircase(args.first)
    b = _load_staircase(args.second)
    total = connect_four_add(a, b)
    _emit(args, total.to_json(), table=total.pretty())


def cmd_decompose(args):
    delta = _load_staircase(args.delta)
    _guard(args, delta.dim, len(delta))
    if args.graph:
        graph = build_iterated_graph(
            delta, truncate=args.truncate, max_dim=args.max_dim, max_size=args.max_size
        )
        counts = graph.label_counts()
        body = {
            "graph": graph.to_json(),
            "label_counts": {str(k): counts[k] for k in sorted(counts)},
            "admissible_subgraphs": count_admissible_subgraphs(graph),
        }
        table = _rows(["label", "nodes"], [(k, counts[k]) for k in sorted(counts)])
        _emit(args, body, table=table, dot=graph.to_dot())
        return
    decs = enumerate_decompositions(delta)
    d = decomposition_number(delta)
    if args.count_only:
        _emit(args, {"decompositions": len(decs), "d": d}, table=f"decompositions {len(decs)}\nd {d}")
        return
    body = {
        "delta": delta.to_json(),
        "decompositions": [x.to_json() for x in decs],
        "count": len(decs),
        "d": d,
    }
    table = "\n".join(x.pretty() for x in decs) + f"\ncount {len(decs)}  d {d}"
    _emit(args, body, table=table)


def cmd_points(args):
    if args.file:
        A = PointSet.from_json(_load(args.file), _field(args))
    else:
        if args.random is None or args.dim is None:
            raise ValidationError("give a point file or --random N --dim n")
        _guard(args, args.dim, args.random)
        rng = random.Random(args.seed)
        A = random_point_set(rng, _field(args), args.dim, args.random)
    _guard(args, A.dim, len(A))
    G = vanishing_ideal_gb(A)
    body = {"points": A.to_json(), "staircase": G.delta.to_json()}
    lines = [f"D(A) = {G.delta.pretty()}"]
    if args.slice:
        body["slices"] = [
            {
                "lambda": A.field.coef_to_json(lam),
                "points": S.to_json(),
                "staircase": vanishing_ideal_gb(S).delta.to_json() if S.dim else None,
            }
            for lam, S in slice_points(A).items()
        ]
        for s in body["slices"]:
            lines.append(f"slice {s['lambda']}: {len(s['points']['points'])} points")
    if args.gb:
        body["basis"] = G.to_json()
        lines.extend(str(p) for p in G.polynomials())
    _emit(args, body, table="\n".join(lines))


def cmd_connect4(args):
    if args.instance:
        inst = SlicedInstance.from_json(_load(args.instance))
        if args.field and parse_field(args.field) != inst.field:
            inst = inst.change_field(parse_field(args.field))
    else:
        if args.dim is None or args.random_size is None:
            raise ValidationError("give --instance FILE or --random MAXSIZE --dim n")
        _guard(args, args.dim, args.random_size)
        rng = random.Random(args.seed)
        inst = random_instance(rng, _field(args), args.dim, args.random_size)
    _guard(args, inst.n, len(inst.delta))
    result = reduce_to_psi(inst, trace=args.trace)
    body = {"instance": inst.to_json(), **result.to_json(include_trace=args.trace)}
    ok = True
    summary = {}
    if args.verify in ("oracle", "both"):
        oracle = intersect_ideals_gb([(s.basis, s.lam) for s in inst.summands])
        same = oracle.to_json() == result.psi.to_json()
        summary["oracle"] = "pass" if same else "fail"
        ok &= same
    if args.verify in ("membership", "both"):
        mem = membership_check(inst, result)
        summary["membership"] = "pass" if mem.ok else "fail"
        summary["membership_failures"] = [[list(a), i] for a, i in mem.failures()]
        ok &= mem.ok
    if args.verify != "none":
        nodes_ok = all(
            check_interpolation(range(len(n)), list(n), inst.field) for n in result.interpolation_nodes
        )
        summary["interpolation"] = "pass" if nodes_ok else "fail"
        ok &= nodes_ok
        body["verification"] = summary
    lines = [f"Delta = {inst.delta.pretty()}"] + [str(p) for p in result.psi.polynomials()]
    lines += [f"{k}: {v}" for k, v in summary.items() if k != "membership_failures"]
    _emit(args, body, table="\n".join(lines))
    if not ok:
        raise _Failed("verification failed")


def cmd_stratum(args):
    if args.stratum_cmd == "report":
        delta = _load_staircase(args.delta)
        _guard(args, delta.dim, len(delta))
        rep = report(delta)
        body = rep.to_json()
        body["nr_bound"] = dimension_vs_nr(delta).to_json()
        table = (
            f"Delta {delta.pretty()}\ndimension {rep.dimension}\n"
            f"components {rep.irreducible_components}\nnote: {rep.caveat}"
        )
        _emit(args, body, table=table)
        return
    _guard(args, args.dim, args.size)
    rows = stratum_table(args.dim, args.size)
    body = {
        "dim": args.dim,
        "size": args.size,
        "rows": [
            {
                "delta": r["delta"].to_json(),
                "dimension": r["dimension"],
                "d": r["d"],
                "n_times_r": r["n_times_r"],
            }
            for r in rows
        ],
    }
    table = _rows(
        ["delta", "dim", "d", "nr"],
        [(r["delta"].pretty(), r["dimension"], r["d"], r["n_times_r"]) for r in rows],
    )
    _emit(args, body, table=table)


# -- parser -------------------------------------------------------------------


def _add_globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--field", default=d(None), help="coefficient field: Q or Fp such as F101 (default Q)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for every random choice")
    p.add_argument("--output", choices=("json", "table", "dot"), default=d("json"))
    p.add_argument("--max-dim", type=int, default=d(DEFAULT_MAX_DIM))
    p.add_argument("--max-size", type=int, default=d(DEFAULT_MAX_SIZE))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="connect4",
        description="Connect Four addition, decompositions and lex Groebner bases of sliced ideals.",
    )
    _add_globals(parser, False)
    sub = parser.add_subparsers(dest="command", required=True)

    # Global flags may also follow the subcommand; there they default to
    # SUPPRESS so they never overwrite a value given before it.
    def child(name, parent=sub, **kw):
        p = parent.add_parser(name, **kw)
        _add_globals(p, True)
        return p

    p = child("add", help="Connect Four sum of two staircases")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_add)

    p = child("decompose", help="decompositions, d(Delta) and decomposition graphs")
    p.add_argument("delta")
    p.add_argument("--count-only", action="store_true", default=False)
    p.add_argument("--graph", action="store_true", default=False)
    p.add_argument("--truncate", action="store_true", default=False)
    p.set_defaults(func=cmd_decompose)

    p = child("points", help="staircase and vanishing ideal of a point set")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--slice", action="store_true", default=False)
    p.add_argument("--gb", action="store_true", default=False)
    p.add_argument("--random", type=int, default=None, metavar="N", help="draw N random points")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=cmd_points)

    p = child("connect4", aliases=["gb"], help="Groebner basis of an intersection of sliced ideals")
    p.add_argument("--instance", default=None)
    p.add_argument("--trace", action="store_true", default=False)
    p.add_argument("--verify", choices=("none", "oracle", "membership", "both"), default="none")
    p.add_argument("--random", dest="random_size", type=int, default=None, metavar="MAXSIZE",
                   help="with --dim: generate a random instance of at most this size")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=cmd_connect4)

    p = child("stratum", help="dimension and component counts of the stratum of reduced points")
    ssub = p.add_subparsers(dest="stratum_cmd", required=True)
    r = child("report", ssub)
    r.add_argument("--delta", required=True)
    t = child("table", ssub)
    t.add_argument("--dim", type=int, required=True)
    t.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_stratum)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.func(args)
    except _Failed:
        return EXIT_VERIFY
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalReductionFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except Connect4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
