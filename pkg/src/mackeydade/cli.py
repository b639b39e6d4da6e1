"""Command-line front end.

    mackeydade lattice --group D8
    mackeydade linmu --group C4 --format json
    mackeydade verify --group all --no-timing

Exit status: 0 on success, 1 when a verification check fails, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction

from .burnside import mark_table
from .dade import delta_position, dmu_dim, underline_dmu
from .exactla import ExactMatrix, rank
from .groups import BUILTINS, FiniteGroup, GroupError, all_subgroups, is_cyclic, make_group, subquotient_classes
from .lambda_ring import LambdaElement, alpha, lambda_mult, lin_mu_direct, lin_mu_kernel, lin_mu_via_alpha
from .mackey.algebra import basis_count_oracle, build_algebra
from .mackey.functors import bar, burnside_functor, check_relations, fixed_point_functor
from .verify import CATALOG, verify

SUBCOMMANDS = ("lattice", "marks", "lambda", "alpha", "linmu", "dade", "mackey", "verify")


class UsageError(Exception):
    pass


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def matrix_json(M: ExactMatrix) -> list[list[str]]:
    return [[rat(x) for x in row] for row in M.rows]


def members(H) -> str:
    return "{" + ",".join(map(str, H.members)) + "}"


# --------------------------------------------------------------------------
# output


def emit_tables(doc: dict, fmt: str, out) -> None:
    """``doc`` maps section names to scalars, or to tables given as {"header": [...], "rows": [...]}."""
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for key, val in doc.items():
            if isinstance(val, dict) and "rows" in val:
                w.writerow([f"# {key}"])
                w.writerow(val["header"])
                w.writerows(val["rows"])
            else:
                w.writerow([key, json.dumps(val) if isinstance(val, (list, dict)) else val])
        return
    for key, val in doc.items():
        if isinstance(val, dict) and "rows" in val:
            out.write(f"{key}:\n")
            rows = [list(map(str, val["header"]))] + [[str(x) for x in r] for r in val["rows"]]
            widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))] if rows[0] else []
            for r in rows:
                out.write("  " + "  ".join(c.rjust(wd) for c, wd in zip(r, widths)) + "\n")
        else:
            out.write(f"{key}: {val}\n")


def matrix_table(M: ExactMatrix, row_names=None, col_names=None) -> dict:
    col_names = col_names or [str(j) for j in range(M.ncols)]
    row_names = row_names or [str(i) for i in range(M.nrows)]
    return {"header": [""] + list(col_names),
            "rows": [[row_names[i]] + [_short(x) for x in M.rows[i]] for i in range(M.nrows)]}


def _short(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# subcommands


def cmd_lattice(G: FiniteGroup, args) -> dict:
    L = all_subgroups(G, max_order=args.max_order)
    SQ = subquotient_classes(G)
    subs = {"header": ["index", "order", "class", "cyclic", "normalizer", "members"],
            "rows": [[i, H.order, L.class_of[i], int(is_cyclic(H)), L.normalizers[i].order, members(H)]
                     for i, H in enumerate(L.subgroups)]}
    classes = {"header": ["class", "size", "rep_order", "rep"],
               "rows": [[c, len(L.classes[c]), L.rep(c).order, members(L.rep(c))]
                        for c in range(len(L.classes))]}
    sq = {"header": ["class", "big", "small", "cyclic"],
          "rows": [[c, members(SQ.rep(c).big), members(SQ.rep(c).small), int(SQ.is_cyclic(c))]
                   for c in range(len(SQ))]}
    return {"group": G.name, "order": G.order, "subgroups": subs, "classes": classes,
            "subquotients": sq}


def cmd_marks(G: FiniteGroup, args) -> dict:
    T = mark_table(G).matrix
    names = [f"G/{members(all_subgroups(G).rep(c))}" for c in range(T.nrows)]
    doc = {"group": G.name, "order": G.order}
    if args.format == "json":
        doc["marks"] = matrix_json(T)
    else:
        doc["marks"] = matrix_table(T, names)
    return doc


def cmd_lambda(G: FiniteGroup, args) -> dict:
    SQ = subquotient_classes(G)
    n = len(SQ)
    for c in (args.a, args.b):
        if not 0 <= c < n:
            raise UsageError(f"subquotient class {c} out of range 0..{n - 1}")
    prod = lambda_mult(LambdaElement.basis(G, args.a), LambdaElement.basis(G, args.b))
    name = lambda c: f"[{members(SQ.rep(c).big)},{members(SQ.rep(c).small)}]"
    terms = [[c, name(c), _short(x)] for c, x in enumerate(prod.coords) if x]
    return {"group": G.name, "order": G.order, "a": name(args.a), "b": name(args.b),
            "product": terms if args.format == "json" else
            {"header": ["class", "subquotient", "coefficient"], "rows": terms}}


def cmd_alpha(G: FiniteGroup, args) -> dict:
    A = alpha(G)
    return {"group": G.name, "order": G.order, "shape": list(A.shape), "rank": rank(A),
            "alpha": matrix_json(A) if args.format == "json" else matrix_table(A)}


def cmd_linmu(G: FiniteGroup, args) -> dict:
    D, V = lin_mu_direct(G), lin_mu_via_alpha(G)
    K = lin_mu_kernel(G)
    doc = {"group": G.name, "order": G.order, "shape": list(D.shape), "rank": rank(D),
           "kernel_dim": K.ncols, "equal": D == V}
    mats = {"direct": D, "via_alpha": V, "difference": D - V, "kernel": K}
    for k, M in mats.items():
        doc[k] = matrix_json(M) if args.format == "json" else matrix_table(M)
    return doc


def cmd_dade(G: FiniteGroup, args) -> dict:
    B = underline_dmu(G)
    return {"group": G.name, "order": G.order, "dmu_dim": dmu_dim(G), "underline_dim": B.ncols,
            "delta_position": delta_position(G),
            "underline_basis": matrix_json(B) if args.format == "json" else matrix_table(B)}


def cmd_mackey(G: FiniteGroup, args) -> dict:
    doc: dict = {"group": G.name, "order": G.order, "field": args.field}
    if G.order <= 8:
        A = build_algebra(G)
        doc["algebra_dim"] = A.dim
        doc["algebra_dim_oracle"] = basis_count_oracle(G)
    else:
        doc["algebra_dim"] = None
    rng = random.Random(args.seed)
    rows = []
    for M in (burnside_functor(G, args.field), fixed_point_functor(G, args.field)):
        rep = check_relations(M, rng, conjugators=None if G.order <= 8 else 8)
        for fam in sorted(rep.checked):
            rows.append([M.name, fam, rep.checked[fam], len(rep.failures.get(fam, []))])
        doc[f"{M.name}_bar_dims"] = [bar(M, h).dim for h in M.subs]
    doc["relations"] = rows if args.format == "json" else \
        {"header": ["functor", "family", "checked", "failed"], "rows": rows}
    return doc


HANDLERS = {"lattice": cmd_lattice, "marks": cmd_marks, "lambda": cmd_lambda, "alpha": cmd_alpha,
            "linmu": cmd_linmu, "dade": cmd_dade, "mackey": cmd_mackey}


def emit_verify(reports, fmt: str, out) -> None:
    docs = [r.as_dict() for r in reports]
    if fmt == "json":
        out.write(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["group", "order", "id", "theorem", "status", "millis", "witness"])
        for d in docs:
            for c in d["checks"]:
                w.writerow([d["group"], d["order"], c["id"], c["theorem"], c["status"], c["millis"],
                            json.dumps(c["witness"], sort_keys=True)])
    else:
        for d in docs:
            out.write(f"{d['group']} (order {d['order']})\n")
            for c in d["checks"]:
                wit = json.dumps(c["witness"], sort_keys=True)
                out.write(f"  {c['status'].upper():4}  {c['id']:24} {c['millis']:6d} ms  {wit}\n")


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", action="append", default=None,
                        help="group spec such as C4, C2xC2, D8, He27 (repeatable; 'all' for the built-ins with verify)")
    common.add_argument("--field", choices=("Q", "Fp"), default="Q")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-order", type=int, default=32)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="mackeydade", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "lambda":
            sp.add_argument("a", type=int, help="first subquotient class index")
            sp.add_argument("b", type=int, help="second subquotient class index")
        if name == "verify":
            sp.add_argument("--no-timing", action="store_true",
                            help="report 0 ms for every check so reports are byte-reproducible")
            sp.add_argument("--check", action="append", choices=[c.id for c in CATALOG],
                            help="run only the named checks")
    return p


def _groups(args) -> list[FiniteGroup]:
    specs = args.group or ["C2xC2"]
    if args.command == "verify" and "all" in specs:
        specs = [s for s in specs if s != "all"] + list(BUILTINS)
    elif args.command != "verify" and len(specs) != 1:
        raise UsageError(f"{args.command} takes exactly one --group")
    out = []
    for s in dict.fromkeys(specs):
        G = make_group(s)
        if G.order > args.max_order:
            raise UsageError(f"{s} has order {G.order} > --max-order {args.max_order}")
        out.append(G)
    return out


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        groups = _groups(args)
        if args.command == "verify":
            reports = [verify(G, seed=args.seed, timing=not args.no_timing,
                              only=set(args.check) if args.check else None)
                       for G in sorted(groups, key=lambda G: G.name)]
            emit_verify(reports, args.format, out)
            return 0 if all(r.ok for r in reports) else 1
        doc = HANDLERS[args.command](groups[0], args)
    except (UsageError, GroupError) as e:
        sys.stderr.write(f"mackeydade: error: {e}\n")
        return 2
    emit_tables(doc, args.format, out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
