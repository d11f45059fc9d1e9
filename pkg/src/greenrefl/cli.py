"""Command-line front end.

Subcommands: symbols, chartable, coset-chartable, hall-littlewood, kostka,
green, fake-degrees, verify.  All output is deterministic; --format picks
pretty text, CSV, or JSON, and --out redirects it to a file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import (
    GroupParams,
    enumerate_class_params,
    ep_str,
    make_symbol,
    similarity_order,
)
from .gepn import coset_algebra, coset_char_table, fake_degrees, green_suite, kostka_gepn, z_coset
from .oracle import SIZE_CAP, BruteForceGroup
from .symfunc import level_for
from .wreath import LabeledMatrix, hl_data, kostka, level_char_table

SYMBOLIC_CAP = 24


def build_parser():
    parser = argparse.ArgumentParser(
        prog="greenrefl",
        description=(
            "Exact character tables, Hall-Littlewood functions, Kostka "
            "matrices and Green functions for the groups G(e,p,n) and "
            "their twisted cosets"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_p=True, with_q=True, with_r=True, with_sign=False):
        p.add_argument("--e", type=int, required=True)
        if with_p:
            p.add_argument("--p", type=int, default=None)
        p.add_argument("--n", type=int, required=True)
        if with_q:
            p.add_argument("--q", type=int, default=0)
        if with_r:
            p.add_argument("--r", type=int, default=2)
        if with_sign:
            p.add_argument("--sign", choices=["+", "-"], default="-")
        p.add_argument(
            "--format", choices=["pretty", "csv", "json"], default="pretty"
        )
        p.add_argument("--out", default=None)

    common(sub.add_parser("symbols", help="symbols, a-values, similarity classes"))
    common(sub.add_parser("chartable", help="character table of G(e,1,n)"),
           with_p=False, with_q=False, with_r=False)
    common(sub.add_parser("coset-chartable", help="character table of the coset"))
    common(sub.add_parser("hall-littlewood",
                          help="Hall-Littlewood functions of G(e,1,n) in Schur coordinates"),
           with_p=False, with_q=False, with_sign=True)
    common(sub.add_parser("kostka", help="Kostka matrix (base level when p=1)"),
           with_sign=True)
    common(sub.add_parser("green", help="Green-function suite with the exactness residual"))
    common(sub.add_parser("fake-degrees", help="graded multiplicities in the coinvariant algebra"))
    common(sub.add_parser("verify", help="run the invariant suite; nonzero exit on failure"))
    return parser


def resolve_params(args):
    p = getattr(args, "p", None)
    if p is None:
        p = 1
    q = getattr(args, "q", 0)
    try:
        params = GroupParams(args.e, p, args.n, q)
    except ValueError as exc:
        raise SystemExit(f"invalid parameters: {exc}")
    if args.e * args.n > SYMBOLIC_CAP:
        raise SystemExit(
            f"size guard: e*n = {args.e * args.n} exceeds the symbolic cap {SYMBOLIC_CAP}"
        )
    r = getattr(args, "r", 2)
    if r is not None and r < 1:
        raise SystemExit("size guard: r must be >= 1")
    return params


def emit(text, args):
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def jdump(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_symbols(args):
    params = resolve_params(args)
    order = similarity_order(params, args.r)
    m = (params.n,) * params.e
    if args.format == "json":
        data = []
        for cls, a in zip(order.classes, order.a_values):
            data.append(
                {
                    "a_value": a,
                    "members": [
                        {
                            "label": z.label(),
                            "alpha": [list(c) for c in z.alpha],
                            "phi": z.phi,
                            "symbol": [
                                list(row)
                                for row in make_symbol(z.alpha, m, args.r).rows
                            ],
                        }
                        for z in cls
                    ],
                }
            )
        emit(jdump(data), args)
        return 0
    lines = []
    for ci, (cls, a) in enumerate(zip(order.classes, order.a_values)):
        lines.append(f"class {ci + 1} (a = {a}):")
        for z in cls:
            sym = make_symbol(z.alpha, m, args.r)
            rows = ";".join(
                ",".join(str(x) for x in row) for row in sym.rows
            )
            lines.append(f"  {z.label():<16} ({rows})")
    emit("\n".join(lines) + "\n", args)
    return 0


def _emit_matrix(mat, args, heading=None):
    if args.format == "json":
        emit(jdump(mat.to_json()), args)
    elif args.format == "csv":
        emit(mat.to_csv(), args)
    else:
        text = (heading + "\n") if heading else ""
        emit(text + mat.pretty() + "\n", args)
    return 0


def cmd_chartable(args):
    params = resolve_params(args)
    table = level_char_table(level_for(args.e, args.n))
    return _emit_matrix(table.matrix, args, f"character table of G({args.e},1,{args.n})")


def cmd_coset_chartable(args):
    params = resolve_params(args)
    table = coset_char_table(params, args.r)
    return _emit_matrix(
        table.matrix(),
        args,
        f"character table of sigma^{params.q} G({params.e},{params.p},{params.n})",
    )


def cmd_hall_littlewood(args):
    params = resolve_params(args)
    level = level_for(args.e, args.n)
    data = hl_data(level, args.r)
    sign = +1 if args.sign == "+" else -1
    rows = data.sp if sign > 0 else data.sm
    qrows = data.qp if sign > 0 else data.qm
    labels = [ep_str(alpha) for alpha in data.order]
    cols = [ep_str(alpha) for alpha in level.partitions]
    blocks = [len(c) for c in data.classes]
    pmat = LabeledMatrix(labels, cols, rows, blocks, None)
    qmat = LabeledMatrix(labels, cols, qrows, blocks, None)
    if args.format == "json":
        emit(jdump({"P": pmat.to_json(), "Q": qmat.to_json()}), args)
        return 0
    if args.format == "csv":
        emit(pmat.to_csv() + "\n" + qmat.to_csv(), args)
        return 0
    emit(
        f"P{args.sign} in Schur coordinates:\n" + pmat.pretty()
        + f"\n\nQ{args.sign} in Schur coordinates:\n" + qmat.pretty() + "\n",
        args,
    )
    return 0


def cmd_kostka(args):
    params = resolve_params(args)
    sign = +1 if args.sign == "+" else -1
    if params.p == 1:
        mat = kostka(args.e, args.n, args.r, sign)
    else:
        mat = kostka_gepn(params, args.r, sign)
    return _emit_matrix(mat, args, f"Kostka matrix K{args.sign}")


def cmd_green(args):
    params = resolve_params(args)
    suite = green_suite(params, args.r)
    if args.format == "json":
        emit(jdump(suite.to_json()), args)
        return 0 if suite.residual_zero else 1
    if args.format == "csv":
        text = (
            suite.ktilde_minus.to_csv()
            + "\n" + suite.ktilde_plus.to_csv()
            + "\n" + suite.lambda_tilde.to_csv()
            + "\n" + suite.omega_prime.to_csv()
        )
        emit(text, args)
        return 0 if suite.residual_zero else 1
    parts = [
        f"G({params.e},{params.p},{params.n})  coset q={params.q}  r={args.r}",
        "",
        "Ktilde- (Green functions):",
        suite.ktilde_minus.pretty(),
        "",
        "Ktilde+:",
        suite.ktilde_plus.pretty(),
        "",
        "LambdaTilde (symmetric presentation):",
        suite.lambda_symmetric.pretty(),
        "",
        "OmegaPrime:",
        suite.omega_prime.pretty(),
        "",
        f"residual of Ktilde- LambdaTilde tr(Ktilde+) - OmegaPrime: "
        + ("0 (exact)" if suite.residual_zero else "NONZERO"),
    ]
    emit("\n".join(parts) + "\n", args)
    return 0 if suite.residual_zero else 1


def cmd_fake_degrees(args):
    params = resolve_params(args)
    degs = fake_degrees(params, args.r)
    alg = coset_algebra(params, args.r)
    if args.format == "json":
        emit(
            jdump({z.label(): degs[z].to_json() for z in alg.chars}),
            args,
        )
        return 0
    lines = [f"{z.label():<18} {degs[z]}" for z in alg.chars]
    emit("\n".join(lines) + "\n", args)
    return 0


def cmd_verify(args):
    params = resolve_params(args)
    checks = []

    def check(name, fn):
        try:
            ok = fn()
        except Exception as exc:           # report, do not crash the suite
            checks.append((name, False, str(exc)))
            return
        checks.append((name, bool(ok), ""))

    alg = coset_algebra(params, args.r)
    check(
        "character/class counts agree",
        lambda: len(alg.chars) == len(alg.class_params),
    )
    check("coset table orthogonality (unitarity)", alg.orthogonality_holds)

    def x_at_zero():
        table = alg.coset_table()
        for mat in (alg.x_plus(), alg.x_minus()):
            for i in range(len(alg.class_params)):
                for j in range(len(alg.chars)):
                    if mat[i][j].eval_zero() != table[i][j]:
                        return False
        return True

    check("transition matrices specialize to the table at t=0", x_at_zero)

    def kostka_match():
        for sign in (+1, -1):
            direct = alg.kostka_direct(sign)
            assembled = alg.kostka_assembled(sign)
            for ra, rb in zip(direct, assembled):
                for a, b in zip(ra, rb):
                    if a != b:
                        return False
        return True

    check("Kostka assembly equals the direct transition matrix", kostka_match)

    def green_ok():
        suite = alg.green()
        return suite.residual_zero

    check("Green factorization holds exactly", green_ok)

    if params.q == 0:

        def fake_ok():
            degs = fake_degrees(params, args.r)
            for f in degs.values():
                if not f.is_polynomial():
                    return False
                for c in f.num.coeffs:
                    if not c.is_rational() or c.to_fraction().denominator != 1:
                        return False
                    if c.to_fraction() < 0:
                        return False
            return True

        check("fake degrees are polynomials with natural coefficients", fake_ok)

    if params.order <= SIZE_CAP:

        def oracle_table_ok():
            if params.q != 0:
                return True
            from math import gcd

            group = BruteForceGroup(params)
            table = coset_char_table(params, args.r)
            oracle_table = group.character_table()
            big = oracle_table[0][0].field.e
            lcm = big * params.e // gcd(big, params.e)
            col_map = [
                group.class_index_of(group.element_for_class_param(xi.beta, xi.b))
                for xi in table.cols
            ]
            lib = {tuple(v.embed(lcm) for v in row) for row in table.entries}
            ora = {
                tuple(row[c].embed(lcm) for c in col_map) for row in oracle_table
            }
            return lib == ora

        check("coset table matches the brute-force character table", oracle_table_ok)

        def centralizers_ok():
            group = BruteForceGroup(params)
            for xi in enumerate_class_params(params):
                w = group.element_for_class_param(xi.beta, xi.b)
                if z_coset(xi, params, args.r).centralizer != group.centralizer_order(
                    w, params.q
                ):
                    return False
            return True

        check("centralizer orders match brute force", centralizers_ok)

    # opportunistic (never asserted): Kostka entries polynomial with
    # nonnegative integral coefficients
    poly_count = 0
    total = 0
    for sign in (+1, -1):
        for row in alg.kostka_assembled(sign):
            for v in row:
                if v.is_zero():
                    continue
                total += 1
                if v.is_polynomial():
                    poly_count += 1

    lines = []
    ok_all = True
    for name, ok, msg in checks:
        status = "ok" if ok else "FAIL"
        ok_all = ok_all and ok
        suffix = f"  ({msg})" if msg else ""
        lines.append(f"[{status:>4}] {name}{suffix}")
    lines.append(
        f"[info] {poly_count}/{total} nonzero Kostka entries are polynomial in t"
    )
    emit("\n".join(lines) + "\n", args)
    return 0 if ok_all else 1


COMMANDS = {
    "symbols": cmd_symbols,
    "chartable": cmd_chartable,
    "coset-chartable": cmd_coset_chartable,
    "hall-littlewood": cmd_hall_littlewood,
    "kostka": cmd_kostka,
    "green": cmd_green,
    "fake-degrees": cmd_fake_degrees,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
