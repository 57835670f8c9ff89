"""Command-line front end: ``repzeta <subcommand> ...``.

Every subcommand prints a report ``{command, inputs, outcome, payload}``
as JSON (default) or as plain text with ``--format text``.  The exit code
is 1 when an assertion-grade check failed and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arith, counting, igusa, qalg, schemes, verify, weyl

INT64 = 2 ** 63


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str) or isinstance(x, float):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= INT64 else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (qalg.Poly, qalg.RatFun)):
        return qalg.render(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return str(x)


def _scheme(args) -> schemes.GroupScheme:
    if args.family is None or args.n is None:
        raise qalg.DomainError("--family and --n are required")
    return schemes.GroupScheme(args.family, args.n, args.delta if args.family == "F" else 0)


def cmd_local_zeta(args):
    g = _scheme(args)
    mult = schemes.local_zeta_multiplicative(g)
    payload = {"scheme": g.name, "zeta": qalg.render(mult), "d": g.d_rank, "alpha": g.alpha,
               "poles": schemes.pole_set(g)}
    outcome = "report"
    if args.check:
        ok = schemes.verify_additive_vs_multiplicative(g) and schemes.check_functional_equation(g)
        payload["additive_equals_multiplicative"] = schemes.verify_additive_vs_multiplicative(g)
        payload["functional_equation"] = schemes.check_functional_equation(g)
        outcome = "pass" if ok else "fail"
    if args.q is not None:
        payload["coefficients"] = schemes.local_coefficients(g, args.q, args.order)
    return outcome, payload, payload["zeta"]


def cmd_global_coeffs(args):
    g = _scheme(args)
    local = arith.global_coeffs_from_local(g, args.bound)
    conv = arith.dirichlet_from_quotient_data(arith.quotient_data(g), args.bound)
    ok = local == conv and local.is_multiplicative()
    payload = {"scheme": g.name, "bound": args.bound, "coeffs": local.as_list(),
               "convolution_route_agrees": local == conv}
    return ("pass" if ok else "fail"), payload, ",".join(map(str, local.coeffs))


def cmd_verify(args):
    checks = verify.run_suite(args.suite, args.max_n, args.jobs)
    outcome = verify.overall(checks)
    payload = {"checks": [c.as_dict() for c in checks],
               "counts": {k: sum(1 for c in checks if c.outcome == k) for k in ("pass", "fail", "report")}}
    text = "\n".join(f"{c.outcome:6s} {c.suite:10s} {c.name}" for c in checks)
    return outcome, payload, text


def cmd_weyl_stats(args):
    rows = weyl.stat_table(args.n)
    text = "\n".join(f"{r['window']} l={r['l']} neg={r['neg']} D={r['D']} sigma={r['sigma']} "
                     f"rmaj={r['rmaj']} L={r['L']}" for r in rows)
    return "report", rows, text


def cmd_conjecture_L(args):
    rep = weyl.conjecture_L_report(args.n)
    bad = [k for k, v in rep.items() if v["proved_case"] and not v["match"]]
    text = "\n".join(f"I={k:12s} match={v['match']} proved={v['proved_case']}" for k, v in rep.items())
    return ("fail" if bad else "pass"), rep, text


def cmd_counts(args):
    rows = []
    if args.space:
        sp = counting.MatrixSpaceKind(args.space, args.size)
        q = args.q or 2
        enum = counting.rank_count_enumerate(sp, q)
        for i in range(sp.n + 1):
            rk = sp.rank_of_index(i)
            closed = counting.rank_count_closed(sp, i, q)
            got = enum.get(rk, 0)
            rows.append({"space": str(sp), "q": q, "profile": {"rank": rk}, "closed": closed,
                         "enumerated": got, "match": closed == got})
    else:
        g = _scheme(args)
        p = args.p or 2
        for N in range(1, args.order + 1):
            for I in qalg.SubsetIndex.all(g.n):
                for r in counting.compositions(I, N):
                    closed = counting.count_type_closed(g, I, r, p)
                    got = counting.count_type_enumerate(g, I, r, p, jobs=args.jobs)
                    rows.append({"space": g.name, "q": [p, N],
                                 "profile": {"I": list(I.elements), "r_I": list(r),
                                             "nu": list(counting.target_profile(I, r))},
                                 "closed": closed, "enumerated": got, "match": closed == got})
    ok = all(r["match"] for r in rows)
    text = "\n".join(f"{r['space']} {r['q']} {r['profile']} closed={r['closed']} "
                     f"enumerated={r['enumerated']}" for r in rows)
    return ("pass" if ok else "fail"), rows, text


def cmd_igusa(args):
    kind = igusa.PvsKind(args.kind, args.size)
    p = args.p or 3
    closed = igusa.closed_coefficients(kind, p, args.order)
    rows = []
    report_only = kind.kind == "SymDet" and p == 2
    for k in range(args.order + 1):
        oracle = igusa.igusa_coeff_oracle(kind, p, k, jobs=args.jobs)
        rows.append({"kind": str(kind), "p": p, "k": k, "oracle": oracle,
                     "closed_coeff": closed[k], "match": oracle == closed[k]})
    payload = {"closed_form": qalg.render(igusa.igusa_closed(kind)), "rows": rows,
               "poles": igusa.pvs_pole_set(kind)}
    ok = all(r["match"] for r in rows)
    outcome = "report" if report_only else ("pass" if ok else "fail")
    text = payload["closed_form"] + "\n" + "\n".join(
        f"k={r['k']} oracle={r['oracle']} closed={r['closed_coeff']}" for r in rows)
    return outcome, payload, text


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--family", choices=["F", "G", "H"])
    shared.add_argument("--n", type=int)
    shared.add_argument("--delta", type=int, default=0, choices=[0, 1])
    shared.add_argument("--q", type=int)
    shared.add_argument("--p", type=int)
    shared.add_argument("--bound", type=int, default=100)
    shared.add_argument("--order", type=int, default=2)
    shared.add_argument("--format", choices=["json", "text"], default="json")
    shared.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="repzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("local-zeta", parents=[shared], help="local zeta function of a group scheme")
    p.add_argument("--check", action="store_true", help="also run the additive and functional-equation checks")
    p.set_defaults(func=cmd_local_zeta)

    p = sub.add_parser("global-coeffs", aliases=["coeffs"], parents=[shared],
                       help="global Dirichlet coefficients over Q")
    p.set_defaults(func=cmd_global_coeffs)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weyl-stats", parents=[shared], help="statistics of all signed permutations")
    p.set_defaults(func=cmd_weyl_stats)

    p = sub.add_parser("conjecture-L", parents=[shared], help="descent-class test of the L statistic")
    p.set_defaults(func=cmd_conjecture_L)

    p = sub.add_parser("counts", parents=[shared], help="rank counts or elementary-divisor type counts")
    p.add_argument("--space", choices=["Alt", "Mat", "Sym"])
    p.add_argument("--size", type=int, default=2)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("igusa", parents=[shared], help="Igusa zeta function: closed form vs oracle")
    p.add_argument("--kind", choices=list(igusa.KINDS), default="MatDet")
    p.add_argument("--size", type=int, default=2)
    p.set_defaults(func=cmd_igusa)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("weyl-stats", "conjecture-L") and args.n is None:
        parser.error("--n is required")
    try:
        outcome, payload, text = args.func(args)
    except (qalg.DomainError, counting.ResourceError, weyl.ResourceError) as exc:
        print(f"repzeta: error: {exc}", file=sys.stderr)
        return 2
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format")}
    report = {"command": args.command, "inputs": inputs, "outcome": outcome, "payload": payload}
    if args.format == "json":
        print(json.dumps(_jsonable(report), sort_keys=True))
    else:
        print(text)
    return 1 if outcome == "fail" else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
