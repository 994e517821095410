"""Command-line entry point: ``bergekit <subcommand> ...``.

Matrix arguments are either a path to a file in the text format
(``"<rows> <cols>"`` header, then one 0/1 string per row) or an inline
literal of top-to-bottom column strings such as ``110,101,011``.  Where a
graph is accepted, ``"m;u-v,u-v"`` is read as its vertex-edge incidence matrix.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import acceptance
from .catalog import catalog
from .classifier import SCHEMA, classify_bh, classify_corpus, classify_treeforb
from .constructions import (
    expand_product,
    g1_extremal,
    h2_extremal,
    h8_extremal,
    ik_extremal,
    make_generalH,
    make_H,
)
from .containment import contains
from .graphs import SimpleGraph, incidence_matrix
from .matrix import BitMatrix, is_simple
from .solver import solve_bh, solve_bh_unrestricted, solve_forb_family, solve_relative
from .transform import shift_fixpoint_matrix


def load_matrix(arg: str) -> BitMatrix:
    p = Path(arg)
    if p.is_file():
        return BitMatrix.parse_text(p.read_text())
    if ";" in arg:
        return incidence_matrix(SimpleGraph.parse(arg))
    return BitMatrix.parse_literal(arg)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(obj) -> None:
    obj = {"schema": SCHEMA, **obj}
    print(_dump(obj))


def cmd_contains(args) -> int:
    F, A = load_matrix(args.F), load_matrix(args.A)
    e = contains(F, A, args.mode)
    if args.json:
        _emit({"present": e is not None, "embedding": e.as_dict() if e else None})
    else:
        print("present" if e else "absent")
        if e:
            print(_dump(e.as_dict()))
    return 0


def cmd_shift(args) -> int:
    A = load_matrix(args.A)
    if not is_simple(A):
        print("error: shifting needs a simple matrix", file=sys.stderr)
        return 2
    sys.stdout.write(shift_fixpoint_matrix(A).to_text())
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "product":
        M = expand_product(args.p, args.m)
    elif kind == "H":
        M = make_H(args.p, args.k, args.t)
    elif kind == "generalH":
        M = make_generalH([int(x) for x in args.parts.split(",")], args.t)
    else:
        if args.name == "ik":
            M = ik_extremal(args.k, args.m)
        else:
            M = {"g1": g1_extremal, "h2": h2_extremal, "h8": h8_extremal}[args.name](args.m)
    sys.stdout.write(M.to_text())
    if args.verify:
        F = load_matrix(args.verify)
        e = contains(F, M, "berge")
        print("verify: " + ("present" if e else "absent"))
        return 1 if e else 0
    return 0


def cmd_bh_exact(args) -> int:
    F = load_matrix(args.F)
    res = solve_bh(F, args.m) if args.mode == "downset" else solve_bh_unrestricted(F, args.m)
    _emit(res.as_dict())
    return 0


def cmd_forb_exact(args) -> int:
    files = sorted(Path(args.family).glob("*.txt"))
    if not files:
        print(f"error: no *.txt matrices in {args.family}", file=sys.stderr)
        return 2
    fam = [BitMatrix.parse_text(f.read_text()) for f in files]
    _emit(solve_forb_family(fam, args.m).as_dict())
    return 0


def cmd_f_rel(args) -> int:
    _emit(solve_relative(load_matrix(args.F), load_matrix(args.P)).as_dict())
    return 0


def cmd_classify(args) -> int:
    F = load_matrix(args.F)
    cls = classify_treeforb(F) if args.forest else classify_bh(F)
    if args.json:
        print(_dump(cls.as_dict()))
    else:
        print(cls.label() + ("  [conditional]" if cls.conditional else ""))
        for r in cls.rules:
            print(f"  rule {r.name} ({r.anchor})")
        if cls.lower_witness:
            print(f"  lower witness: {cls.lower_witness.describe()}")
        if cls.upper_host:
            print(f"  upper host: {cls.upper_host}")
        for n in cls.notes:
            print(f"  note: {n}")
    return 0


def cmd_classify_corpus(args) -> int:
    rep = classify_corpus(args.k, args.max_cols, check_constant=not args.skip_constant)
    text = _dump(rep.as_dict())
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    print(f"{len(rep.entries)} matrices, {len(rep.failures)} failures, {rep.counts()}", file=sys.stderr)
    return 1 if rep.failures else 0


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [k for part in args.only for k in part.split(",") if k]
    cfg = acceptance.SuiteConfig(seed=args.seed, k=args.k, m=args.m)
    try:
        results = acceptance.run_suite(cfg, only)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    if args.json:
        print(_dump({"schema": SCHEMA, "seed": args.seed, "items": [r.as_dict() for r in results]}))
    else:
        for r in results:
            print(r.summary())
            if args.verbose or only:
                for c in r.checks:
                    mark = "ok" if c.passed else "FAIL"
                    print(f"    {c.label}: computed {c.computed}, expected {c.expected} [{mark}]")
    return 0 if all(r.passed for r in results) else 1


def cmd_catalog(args) -> int:
    entries = catalog()
    if args.json:
        print(_dump({"schema": SCHEMA, "matrices": [
            {"name": e.name, "anchor": e.anchor, "rows": e.matrix.rows, "columns": e.matrix.to_literal()}
            for e in entries
        ]}))
        return 0
    for e in entries:
        print(f"{e.name}  {e.matrix.rows}x{e.matrix.ncols}  {e.matrix.to_literal()}  ({e.anchor})")
        for row in e.matrix.to_rows():
            print("    " + row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bergekit", description="Berge hypergraph extremal toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contains", help="test F << A (berge) or F < A (config)")
    p.add_argument("--mode", choices=["berge", "config"], default="berge")
    p.add_argument("--json", action="store_true")
    p.add_argument("F")
    p.add_argument("A")
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("shift", help="shift a simple matrix to a downset")
    p.add_argument("A")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("construct", help="build a construction matrix")
    p.add_argument("kind", choices=["product", "H", "generalH", "extremal"])
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--m", type=int)
    p.add_argument("--parts")
    p.add_argument("--name", choices=["ik", "g1", "h2", "h8"])
    p.add_argument("--verify", metavar="F", help="report whether F is a Berge hypergraph of the result")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bh-exact", help="exact Bh(m,F)")
    p.add_argument("F")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=["downset", "unrestricted"], default="downset")
    p.set_defaults(func=cmd_bh_exact)

    p = sub.add_parser("forb-exact", help="exact forb(m, family) for a directory of matrices")
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_forb_exact)

    p = sub.add_parser("f-rel", help="f(F,P): largest F-free column subset of P")
    p.add_argument("F")
    p.add_argument("P")
    p.set_defaults(func=cmd_f_rel)

    p = sub.add_parser("classify", help="asymptotic class of Bh(m,F)")
    p.add_argument("F")
    p.add_argument("--json", action="store_true")
    p.add_argument("--forest", action="store_true", help="classify forb(m,F) for a forest incidence matrix")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classify-corpus", help="classify and cross-check every small k-rowed matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-cols", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--skip-constant", action="store_true", help="skip exact constancy checks")
    p.set_defaults(func=cmd_classify_corpus)

    p = sub.add_parser("verify-theorems", help="run the reproduction suite")
    p.add_argument("--only", action="append", help=f"items: {','.join(acceptance.ITEMS)}")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list named matrices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return ap


def _require(args, *names) -> str | None:
    missing = [n for n in names if getattr(args, n) is None]
    return f"--{', --'.join(missing)} required" if missing else None


_CONSTRUCT_NEEDS = {"product": ("p", "m"), "H": ("p", "k"), "generalH": ("parts",), "extremal": ("name", "m")}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "construct":
        need = list(_CONSTRUCT_NEEDS[args.kind])
        if args.kind == "extremal" and args.name == "ik":
            need.append("k")
        msg = _require(args, *need)
        if msg:
            ap.error(msg)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
