"""Command-line interface.

Usage::

    eigdisp family-stats --family complete-split --params 5 10 [--numeric|--analytic|--both]
    eigdisp limits-table [--k 1 2 3] [--n 2000]
    eigdisp verify --suite {bounds,oracle,product,clustering}
    eigdisp search --n 6 --objective {max-ce,max-cd,min-gamma}
    eigdisp stats --graph6 FILE|-
    eigdisp clustering --family complete-split --n 5 --m 7
    eigdisp conjectures --n-max 7

JSON goes to stdout (``--csv`` switches format), diagnostics to stderr.
Exit status: 0 success, 1 usage error, 2 verification failure, 3 numeric failure.
"""

import argparse
import math
import sys

from . import closed_form as cf
from .clustering import clustering_report, split_clustering_closed_form, average_clustering, transitivity
from .dispersion import c_d, c_e, dispersion_report
from .exceptions import ConvergenceError, GraphError
from .extremal import Objective, conjecture_report, search, search_graphs
from .families import FamilyKind, FamilySpec, complete_split, kite, realize
from .graph import is_connected
from .graph6 import graph6_encode, read_graph6
from .serialize import dumps_csv, dumps_json
from .spectral import DEFAULT_TOL, principal_eigenpair, principal_ratio
from .verify import run_suite

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(records, args, out):
    if getattr(args, "csv", False):
        out.write(dumps_csv(records if isinstance(records, list) else [records]))
    else:
        if isinstance(records, list):
            for r in records:
                out.write(dumps_json(r) + "\n")
        else:
            out.write(dumps_json(records) + "\n")


def _sq_minus_1(gamma):
    if gamma is None:
        return None
    try:
        return gamma**2 - 1
    except OverflowError:
        return math.inf


def _stats_dict(stats: cf.FamilyStats) -> dict:
    return {
        "gamma": stats.gamma,
        "gamma_sq_minus_1": _sq_minus_1(stats.gamma),
        "c_e": stats.c_e,
        "c_d": stats.c_d,
        "Gamma": stats.Gamma,
        "lambda": stats.lam,
    }


def _family_spec(args) -> FamilySpec:
    try:
        kind = FamilyKind(args.family)
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}") from None
    if kind is FamilyKind.CARTESIAN_POWER:
        if args.base is None or args.power is None:
            raise UsageError("cartesian-power needs --base KIND and --power K")
        base = FamilySpec(FamilyKind(args.base), tuple(args.params))
        return FamilySpec(kind, (base, args.power))
    return FamilySpec(kind, tuple(args.params))


def cmd_family_stats(args, out):
    spec = _family_spec(args)
    record = {"family": spec.label}
    mode = args.mode or "both"
    if mode in ("numeric", "both"):
        record["numeric"] = dispersion_report(realize(spec), tol=args.tol).as_dict()
    if mode in ("analytic", "both"):
        record["analytic"] = _stats_dict(cf.family_stats(spec))
    _emit(record, args, out)
    return EXIT_OK


def _gap(value, limit):
    if value is None or isinstance(limit, cf.Limit):
        return None
    value, limit = float(value), float(limit)
    if math.isinf(value):
        return None
    return abs(value - limit)


def _rows_for(record: cf.LimitRecord, n: int, values: dict) -> list:
    limits = {
        "gamma": record.lim_gamma,
        "gamma_sq_minus_1": record.lim_gamma_sq_minus_1,
        "c_e": record.lim_c_e,
        "c_d": record.lim_c_d,
    }
    rows = []
    for stat, limit in limits.items():
        if limit is None:
            continue
        value = values.get(stat)
        rows.append(
            {
                "family": record.family,
                "k": record.k,
                "n": n,
                "statistic": stat,
                "limit": limit,
                "value": value,
                "gap": _gap(value, limit),
            }
        )
    return rows


def _values(stats: cf.FamilyStats) -> dict:
    d = _stats_dict(stats)
    return {k: d[k] for k in ("gamma", "gamma_sq_minus_1", "c_e", "c_d")}


def limits_table(ks, ns, r=4) -> list:
    rows = []
    table = cf.limits_report(k=ks[0] if ks else 1, r=r)
    for n in ns:
        rows += _rows_for(table[0], n, _values(cf.complete_minus_edge_stats(n)))
        rows += _rows_for(table[1], n, _values(cf.tripartite_stats(n)))
        for k in ks:
            rows += _rows_for(cf.split_limits(k), n, _values(cf.split_stats(n, k * n)))
        g = kite(2, n - 1)
        pair = principal_eigenpair(g)
        gamma = principal_ratio(pair)
        rows += _rows_for(
            table[3], n, {"gamma": gamma, "gamma_sq_minus_1": gamma**2 - 1, "c_e": c_e(g, pair), "c_d": c_d(g)}
        )
        rows += _rows_for(table[4], n, {"c_d": cf.regular_kite_cd(n, n, r)})
        rows += _rows_for(table[5], n, _values(cf.star_stats(n)))
        # G^n with G = P_3, evaluated through the product laws
        rows += _rows_for(table[6], n, _values(cf.power_stats(cf.star_stats(2), n)))
    return rows


def cmd_limits_table(args, out):
    rows = limits_table(args.k, args.n, args.r)
    _emit(rows, args, out)
    return EXIT_OK


def cmd_verify(args, out):
    kwargs = {}
    if args.suite == "bounds":
        kwargs = {"n_max": args.n_max, "workers": args.workers}
    checks = run_suite(args.suite, **kwargs)
    failed = False
    for c in checks:
        status = "PASS" if c.passed else ("NOTE" if c.advisory else "FAIL")
        failed |= not c.passed and not c.advisory
        line = f"{status}  {c.name}"
        if c.detail:
            line += f"  ({c.detail})"
        out.write(line + "\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _open_input(path):
    return sys.stdin if path == "-" else open(path)


def cmd_search(args, out):
    objective = Objective.parse(args.objective)
    if args.graph6:
        with _open_input(args.graph6) as fh:
            result = search_graphs(read_graph6(fh), objective)
    else:
        if args.n is None:
            raise UsageError("search needs --n or --graph6")
        result = search(args.n, objective, workers=args.workers)
    record = result.as_dict()
    # wall time varies run to run; keep stdout byte-stable
    print(f"search finished in {record.pop('runtime'):.2f} s", file=sys.stderr)
    _emit(record, args, out)
    return EXIT_OK


def cmd_stats(args, out):
    records = []
    with _open_input(args.graph6) as fh:
        for g in read_graph6(fh):
            record = {"graph6": graph6_encode(g), "n": g.n, "connected": is_connected(g)}
            if record["connected"]:
                record.update(dispersion_report(g, tol=args.tol).as_dict())
            if g.n >= 1:
                record.update(clustering_report(g).as_dict())
            records.append(record)
    _emit(records, args, out)
    return EXIT_OK


def cmd_clustering(args, out):
    if args.family != "complete-split":
        raise UsageError("clustering comparison supports --family complete-split")
    g = complete_split(args.n, args.m)
    direct = (average_clustering(g), transitivity(g))
    closed = split_clustering_closed_form(args.n, args.m)
    record = {
        "family": f"S({args.n},{args.m})",
        "direct": {"average_clustering": direct[0], "transitivity": direct[1]},
        "closed_form": {"average_clustering": closed[0], "transitivity": closed[1]},
        "equal": direct == closed,
    }
    _emit(record, args, out)
    return EXIT_OK if record["equal"] else EXIT_VERIFY


def cmd_conjectures(args, out):
    report = conjecture_report(args.n_max, n_min=args.n_min, workers=args.workers)
    _emit(report, args, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eigdisp", description="Eigenvector and degree dispersion of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("family-stats", help="statistics of one family member")
    p.add_argument("--family", required=True, choices=[k.value for k in FamilyKind])
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--base", choices=[k.value for k in FamilyKind if k is not FamilyKind.CARTESIAN_POWER])
    p.add_argument("--power", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--numeric", dest="mode", action="store_const", const="numeric")
    mode.add_argument("--analytic", dest="mode", action="store_const", const="analytic")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="power-iteration residual tolerance")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_family_stats)

    p = sub.add_parser("limits-table", help="limits of the seven families against finite n")
    p.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--n", type=int, nargs="+", default=[2000])
    p.add_argument("--r", type=int, default=4, help="head regularity for the regular kite row")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_limits_table)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", required=True, choices=["bounds", "oracle", "product", "clustering"])
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("--n", type=int)
    p.add_argument("--objective", required=True, choices=["max-ce", "max-cd", "min-gamma"])
    p.add_argument("--graph6", help="read candidate graphs from FILE or - instead of enumerating")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("stats", help="dispersion and clustering for graph6 input")
    p.add_argument("--graph6", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="power-iteration residual tolerance")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("clustering", help="direct vs closed-form clustering")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_clustering)

    p = sub.add_parser("conjectures", help="verdicts on the extremal conjectures")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_conjectures)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
