"""Command-line entry point: construction, dumps, and verification suites.

JSON reports go to stdout and are byte-stable for a fixed seed (timings are
zeroed unless --timings is passed); human-readable progress goes to stderr.
Exit codes: 0 all pass, 1 any verification failure, 2 usage or parse errors.
"""

import argparse
import random
import sys

from . import rootdata as rd
from . import schubert as sc
from . import adjoint as aj
from . import rmatrix as rm
from . import frt
from . import report as rp
from .checks import SUITES, SUITE_ORDER


def _suite_rng(seed, name):
    return random.Random("%d:%s" % (seed, name))


def cmd_verify(args):
    names = SUITE_ORDER if args.suite == "all" else (args.suite,)
    all_checks = []
    passed = True
    for name in names:
        checks = SUITES[name](args.max_degree, args.mode, _suite_rng(args.seed, name))
        prefix = "%s." % name if args.suite == "all" else ""
        result = rp.run_suite(name, checks, timings=args.timings, prefix=prefix)
        passed = passed and result["passed"]
        all_checks.extend(result["checks"])
        for check in result["checks"]:
            sys.stderr.write("%-18s %s\n" % (check["status"], check["claim_id"]))
    doc = rp.render_report({"suite": args.suite, "passed": passed,
                            "checks": all_checks},
                           args.seed, args.max_degree, args.mode)
    sys.stdout.write(rp.dumps(doc))
    return 0 if passed else 1


def cmd_nf(args):
    pres = sc.presentation(args.algebra)
    free = sc.parse_expr(args.expr, pres)
    if args.twisted:
        if args.algebra != "what":
            raise ValueError("the twisted product only applies to the affine algebra")
        scaled = sc.NCPoly()
        for word, coeff in free.items():
            exp = 0
            for a in range(len(word)):
                for b in range(a + 1, len(word)):
                    exp += pres.gen_weight[word[a]][0] * pres.gen_weight[word[b]][1]
            scaled.iadd_term(word, coeff * sc.qpow(exp) if exp else coeff)
        free = scaled
    nf = sc.normal_form(free, pres)
    sys.stdout.write(sc.format_poly(nf, pres) + "\n")
    return 0


def cmd_relations(args):
    chosen = [bool(args.algebra), args.frt_row is not None,
              args.frt_two_rows is not None]
    if sum(chosen) != 1:
        raise ValueError("choose exactly one of --algebra, --frt-row, --frt-two-rows")
    if args.algebra:
        pres = sc.presentation(args.algebra)
        doc = []
        for (a, b), items in sorted(pres.rules.items()):
            doc.append({
                "lhs": [pres.gen_label[a], pres.gen_label[b]],
                "rhs": [{"coeff": c.to_json(),
                         "word": [pres.gen_label[u], pres.gen_label[v]]}
                        for c, (u, v) in items],
            })
    elif args.frt_row is not None:
        s = rd.parse_label(args.frt_row)
        doc = []
        for cls in rd.CLASSES:
            for (i, j), _ in cls:
                vec = frt.frt_relation(s, s, i, j)
                if vec:
                    doc.append({"rows": [rd.label(s), rd.label(s)],
                                "cols": [rd.label(i), rd.label(j)],
                                "vector": frt.relation_vector_json(vec)})
    else:
        s, t = (rd.parse_label(x) for x in args.frt_two_rows)
        doc = []
        for upper in ((s, t), (t, s)):
            for cls in rd.CLASSES:
                for (i, j), _ in cls:
                    vec = frt.frt_relation(upper[0], upper[1], i, j)
                    if vec:
                        doc.append({"rows": [rd.label(upper[0]), rd.label(upper[1])],
                                    "cols": [rd.label(i), rd.label(j)],
                                    "vector": frt.relation_vector_json(vec)})
    sys.stdout.write(rp.dumps(doc))
    return 0


def cmd_dump(args):
    if args.object == "rmatrix":
        if args.format == "json":
            sys.stdout.write(rp.dumps(rm.rhat_json()))
        else:
            sys.stdout.write(rm.rhat_csv())
    else:
        sys.stdout.write(rp.dumps(rd.classes_json()))
    return 0


def cmd_decompose(args):
    rep = aj.decompose_degree(args.algebra, args.degree, mode=args.mode,
                              rng=random.Random(args.seed))
    sys.stdout.write(rp.dumps(rep))
    return 0 if rep["verdict"] == "pass" else 1


def cmd_hwv(args):
    targets = []
    if args.check in ("theta", "all"):
        targets.append(("theta", "w", aj.theta(), (0, 0, 0, 0, 1)))
    for k in range(1, 14):
        name = "omega%d" % k
        if args.check in (name, "all"):
            targets.append((name, "what", aj.build_omega(k), aj.OMEGA_EXPECTED[k][0]))
    if not targets:
        raise ValueError("unknown vector %r" % args.check)
    doc = []
    passed = True
    for name, algebra, vec, want in targets:
        pres = sc.presentation(algebra)
        ok, lam = aj.is_highest_weight(vec, pres)
        span = len(aj.submodule_span(vec, pres)) if ok else 0
        expected_span = aj.weyl_dim(want)
        good = ok and lam == want and span == expected_span
        passed = passed and good
        doc.append({"vector": name, "highest_weight": ok,
                    "weight": list(lam) if lam else None,
                    "expected_weight": list(want),
                    "span_dim": span, "expected_span_dim": expected_span,
                    "status": "pass" if good else "fail"})
        sys.stderr.write("%-6s %s\n" % (doc[-1]["status"], name))
    sys.stdout.write(rp.dumps(doc))
    return 0 if passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qe6",
        description="exact construction and verification of the type-E6 quantum "
                    "Schubert cells, the so10 half-spin braiding, and the "
                    "associated FRT bialgebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=("all",) + SUITE_ORDER)
    p.add_argument("--max-degree", type=int, default=3, dest="max_degree")
    p.add_argument("--mode", default="exact", choices=("exact", "modular"))
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--timings", action="store_true",
                   help="fill elapsed_ms with wall-clock values (breaks "
                        "byte-stability of reports)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--algebra", required=True, choices=("w", "what"))
    p.add_argument("--twisted", action="store_true")
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("relations", help="emit defining relations as JSON")
    p.add_argument("--algebra", choices=("w", "what"))
    p.add_argument("--frt-row", dest="frt_row")
    p.add_argument("--frt-two-rows", dest="frt_two_rows", nargs=2,
                   metavar=("S", "T"))
    p.set_defaults(fn=cmd_relations)

    p = sub.add_parser("dump", help="dump a constructed object")
    p.add_argument("object", choices=("rmatrix", "classes"))
    p.add_argument("--format", default="json", choices=("json", "csv"))
    p.set_defaults(fn=cmd_dump)

    p = sub.add_parser("decompose", help="degree-by-degree module decomposition")
    p.add_argument("--algebra", required=True, choices=("w", "what"))
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mode", default="exact", choices=("exact", "modular"))
    p.add_argument("--seed", type=int, default=2026)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("hwv", help="check the named highest weight vectors")
    p.add_argument("--check", default="all")
    p.set_defaults(fn=cmd_hwv)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, sc.RewriteDepthError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
