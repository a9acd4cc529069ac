"""Command-line front end: standard series, extremal solutions, shadows,
classification tables, the weight-enumerator solve, component characters,
Molien series, fusion rings, lattice theta series and orbifold characters.

Exit codes: 0 success, 1 computation error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import babymonster, extremal, invariants, lattices, modrep, qseries
from .qseries import GRID, QSeries

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        sys.exit(USAGE_EXIT)


def _rank(text) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("invalid rank %r (use p or p/q)" % text)


def _default_order():
    env = os.environ.get("SVOA_ORDER")
    if env:
        return int(env)
    return qseries.DEFAULT_TRUNC // GRID


def _build_parser() -> _Parser:
    p = _Parser(prog="svoa", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--order", type=int, default=None,
                   help="truncation order in powers of q (default %d, or "
                        "SVOA_ORDER)" % _default_order())
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", help="standard q-expansion from the catalog")
    s.add_argument("name", help="one of: %s" % ", ".join(qseries.standard_names()))
    s.add_argument("--rank", type=_rank, default=None)
    s.add_argument("--weight", type=_rank, default=None)

    for cmd in ("extremal-voa", "extremal-svoa"):
        e = sub.add_parser(cmd, help="extremal character and normal form")
        e.add_argument("--rank", type=_rank, required=True)

    sh = sub.add_parser("shadow", help="cusp-1 expansion of an extremal character")
    sh.add_argument("--rank", type=_rank, required=True)

    cl = sub.add_parser("classify", help="existence verdicts over a rank range")
    cl.add_argument("--from", dest="cfrom", type=_rank, required=True)
    cl.add_argument("--to", dest="cto", type=_rank, required=True)
    cl.add_argument("--max", dest="cmax", type=_rank, default=Fraction(56))

    mp = sub.add_parser("monster-poly", help="solve the weight enumerator")
    mp.add_argument("--constraints", default=None,
                    help="JSON file [[i,j,k,\"value\"], ...] overriding the "
                         "default constraint set")

    bb = sub.add_parser("baby", help="component characters of the rank-47/2 theory")
    bb.add_argument("--sector", type=int, choices=(0, 1, 2), default=None)

    mo = sub.add_parser("molien", help="Molien series of the rank-c matrix group")
    mo.add_argument("--rank", type=_rank, required=True)
    mo.add_argument("--deg", type=int, default=48)
    mo.add_argument("--cap", type=int, default=10000)

    ve = sub.add_parser("verlinde", help="fusion ring from the rank-c S-matrix")
    ve.add_argument("--rank", type=_rank, required=True)

    th = sub.add_parser("theta", help="lattice theta series")
    th.add_argument("--lattice", required=True,
                    help="one of: %s" % ", ".join(lattices.lattice_names()))

    ob = sub.add_parser("orbifold", help="involution-orbifold character of a lattice theory")
    ob.add_argument("--lattice", required=True)

    return p


def _emit_series(x: QSeries, fmt: str):
    if fmt == "json":
        print(json.dumps(x.to_json()))
    else:
        print(str(x))


def _trunc(args) -> int:
    order = args.order if args.order is not None else _default_order()
    if order < 1:
        raise ValueError("order must be >= 1")
    return order * GRID


def _fmt_exp(n: int) -> str:
    e = Fraction(n, GRID)
    return str(e)


def _solution_lines(sol):
    rows = ["rank %s  kind %s  k=%d" % (sol.c, sol.kind, sol.k),
            "a = [%s]" % ", ".join(str(x) for x in sol.a),
            "character = %s" % sol.series,
            "A = {%s}" % ", ".join("%s: %s" % (n, v)
                                   for n, v in sorted(sol.A.items()))]
    return rows


def _solution_json(sol):
    return {"rank": str(sol.c), "kind": sol.kind, "k": sol.k,
            "a": [str(x) for x in sol.a],
            "series": sol.series.to_json(),
            "A": {str(n): str(v) for n, v in sorted(sol.A.items())}}


def _shadow_json(rep):
    return {"rank": str(rep.c), "s": rep.s, "B": rep.B.to_json(),
            "first_coeff": str(rep.first_coeff),
            "integral": rep.integral, "nonneg": rep.nonneg}


def _verdict_line(v) -> str:
    if v.status == "exists_known":
        detail = v.name
    elif v.status == "ruled_out":
        detail = ",".join(sorted(v.arguments))
    elif v.status == "conditional_L":
        detail = "L"
    else:
        detail = "?"
    head = ""
    if v.shadow is not None:
        head = "  ".join("%s q^%s" % (coef, exp) for exp, coef in v.shadow.head())
    return "%-6s | %-13s | %-12s | %s" % (v.c, v.status, detail, head)


def run(argv) -> int:
    args = _build_parser().parse_args(argv)
    fmt = args.format
    cmd = args.command

    if cmd == "series":
        x = qseries.standard_series(args.name, _trunc(args), c=args.rank,
                                    h=args.weight)
        _emit_series(x, fmt)

    elif cmd == "extremal-voa":
        sol = extremal.extremal_voa(args.rank)
        if fmt == "json":
            print(json.dumps(_solution_json(sol)))
        else:
            print("\n".join(_solution_lines(sol)))

    elif cmd == "extremal-svoa":
        sol = extremal.extremal_svoa(args.rank)
        if fmt == "json":
            print(json.dumps(_solution_json(sol)))
        else:
            print("\n".join(_solution_lines(sol)))

    elif cmd == "shadow":
        rep = extremal.shadow(extremal.extremal_svoa(args.rank))
        if fmt == "json":
            print(json.dumps(_shadow_json(rep)))
        else:
            print("rank %s  s=%d  B* = %s  integral=%s  nonneg=%s"
                  % (rep.c, rep.s, rep.first_coeff, rep.integral, rep.nonneg))
            print("B (relative to q^(-c/24)) = %s"
                  % rep.B.shift(int(2 * rep.c)))

    elif cmd == "classify":
        verdicts = extremal.classify_range(args.cfrom, args.cto, cmax=args.cmax)
        if fmt == "json":
            print(json.dumps([v.to_json() for v in verdicts]))
        else:
            print("rank   | status        | detail       | shadow head")
            print("-" * 72)
            for v in verdicts:
                print(_verdict_line(v))

    elif cmd == "monster-poly":
        if args.constraints:
            with open(args.constraints) as fh:
                rows = json.load(fh)
            cs = [((int(i), int(j), int(k)), Fraction(v)) for i, j, k, v in rows]
            P = invariants.solve_monster_polynomial(cs, verify_published=False)
        else:
            P = invariants.monster_polynomial()
        if fmt == "json":
            print(json.dumps(P.to_json()))
        else:
            for i, j, k in sorted(P.terms):
                print("%2d %2d %2d  %s" % (i, j, k, P.terms[(i, j, k)]))

    elif cmd == "baby":
        sectors = (args.sector,) if args.sector is not None else (0, 1, 2)
        out = {}
        for l in sectors:
            out[l] = babymonster.baby_character(l, _trunc(args))
        if fmt == "json":
            print(json.dumps({str(l): x.to_json() for l, x in out.items()}))
        else:
            for l, x in out.items():
                print("sector %d: %s" % (l, x))

    elif cmd == "molien":
        T, S = modrep.character_rep(args.rank)
        G = modrep.generate_group([S, T], cap=args.cap)
        rho = modrep.molien(G, args.deg)
        if fmt == "json":
            print(json.dumps({"order": G.order, "series": rho.to_json()}))
        else:
            print("group order %d" % G.order)
            print("molien = %s" % " + ".join(
                "%s t^%d" % (rho.coeff(GRID * k), k)
                for k in range(args.deg + 1) if rho.coeff(GRID * k)))

    elif cmd == "verlinde":
        T, S = modrep.character_rep(args.rank)
        F = modrep.verlinde(S)
        if fmt == "json":
            print(json.dumps({"n": F.n, "N": [[list(r) for r in Ni] for Ni in F.N]}))
        else:
            for i in range(F.n):
                for j in range(i, F.n):
                    terms = ["%s M%d" % (m, k) if m > 1 else "M%d" % k
                             for k, m in enumerate(F.N[i][j]) if m]
                    print("M%d x M%d = %s" % (i, j, " + ".join(terms) or "0"))

    elif cmd == "theta":
        L = lattices.lattice_catalog(args.lattice)
        th = lattices.theta_series(L, _trunc(args))
        _emit_series(th, fmt)

    elif cmd == "orbifold":
        L = lattices.lattice_catalog(args.lattice)
        th = lattices.theta_series(L, _trunc(args))
        x = extremal.orbifold_character(th, L.dim)
        _emit_series(x.truncate(-2 * L.dim + _trunc(args)), fmt)

    return 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except SystemExit:
        raise
    except (ValueError, ZeroDivisionError, RuntimeError, ArithmeticError,
            OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
