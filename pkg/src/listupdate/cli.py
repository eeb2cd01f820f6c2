"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 contract or size violation (and a
failing ``verify``).  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import analysis as an
from . import verify as verify_mod
from .adversary import (
    CASES, CruelSpec, cruel_mfm, cruel_mtf, cruel_mtp, cruel_trans, format_sequence,
    parse_sequence, workload,
)
from .algorithms import RuleSpec, simulate, total_cost
from .core import ListState, middle
from .corpus import MODES, report, report_csv, report_json, tokenize
from .errors import ContractViolation, ItemNotInList, ListUpdateError, SizeLimitError
from .offline import TIE_BREAKS, dyn_opt, stat_exact, stat_paper, true_opt


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_list_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", type=int, metavar="N", help="initial list 1..N")
    g.add_argument("--list-file", metavar="PATH", help="file holding the initial permutation")


def _add_sigma_args(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sigma", metavar="IDS", help="whitespace-separated request ids")
    g.add_argument("--sigma-file", metavar="PATH")
    g.add_argument("--stdin", action="store_true", help="read requests from stdin")


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _initial(args, required=True) -> ListState | None:
    if args.list_file:
        try:
            return ListState(parse_sequence(_read(args.list_file)))
        except ContractViolation as exc:
            raise UsageError(f"malformed list file {args.list_file}: {exc}") from exc
    if args.list is not None:
        if args.list < 1:
            raise UsageError("--list needs N >= 1")
        return ListState.range(args.list)
    if required:
        raise UsageError("give --list N or --list-file PATH")
    return None


def _sigma(args) -> list:
    if args.sigma is not None:
        text, src = args.sigma, "--sigma"
    elif args.sigma_file:
        text, src = _read(args.sigma_file), args.sigma_file
    elif args.stdin:
        text, src = sys.stdin.read(), "stdin"
    else:
        raise UsageError("give --sigma, --sigma-file or --stdin")
    try:
        return parse_sequence(text)
    except ContractViolation as exc:
        raise UsageError(f"malformed sequence from {src}: {exc}") from exc


def _rule(text: str, l: int | None) -> RuleSpec:
    try:
        return RuleSpec.parse(text, l)
    except ContractViolation as exc:
        raise UsageError(str(exc)) from exc


def _ratio_text(x: Fraction, digits: int, exact: bool) -> str:
    return an.fmt_fraction(x) if exact else an.truncate(x, digits)


# -- subcommands --------------------------------------------------------------

def cmd_simulate(args, out):
    initial = _initial(args)
    sigma = _sigma(args)
    rule = _rule(args.rule, len(initial))
    r = simulate(rule, initial, sigma, trace=args.trace)
    if args.json:
        doc = {
            "rule": rule.name, "n": len(sigma), "access": r.ledger.access, "paid": r.ledger.paid,
            "free_moves": r.ledger.free_moves, "total": r.total, "final": r.final_list.as_tuple(),
        }
        if args.trace:
            doc["trace"] = [
                {"item": t.item, "position": t.position, "cost": t.cost, "target": t.target,
                 "list_after": t.list_after}
                for t in r.trace
            ]
        out.write(json.dumps(doc) + "\n")
        return 0
    if args.trace:
        out.write("step item position target list_after\n")
        for i, t in enumerate(r.trace, 1):
            out.write(f"{i} {t.item} {t.position} {t.target} {format_sequence(t.list_after)}\n")
    out.write(f"rule {rule.name}\nn {len(sigma)}\naccess {r.ledger.access}\npaid {r.ledger.paid}\n"
              f"total {r.total}\nfinal {format_sequence(r.final_list)}\n")
    return 0


def cmd_cruel(args, out):
    adv = args.adversary.lower()
    initial = _initial(args, required=False)
    l = len(initial) if initial is not None else args.l
    if l is None:
        raise UsageError("give --l or an initial list")
    if initial is None:
        initial = ListState.range(l)
    if adv == "mfm":
        if args.residual is not None and args.case != "partial":
            raise UsageError("--residual only applies to --case partial")
        seq = cruel_mfm(CruelSpec(l, args.k, args.case, args.residual), initial)
    elif adv.startswith("mtp") or adv == "mflp":
        rule = _rule(adv, l)
        seq = cruel_mtp(rule.q, l, args.k, initial)
    elif adv in ("trans", "mtf"):
        if args.n is None:
            raise UsageError(f"--n is required for the {adv} adversary")
        seq = (cruel_trans if adv == "trans" else cruel_mtf)(l, args.n, initial)
    elif adv in ("uniform", "zipf"):
        if args.n is None:
            raise UsageError(f"--n is required for {adv} workloads")
        seq = workload(adv, initial, args.n, args.seed, args.zipf_s)
    else:
        raise UsageError(f"unknown adversary {args.adversary!r}")
    out.write(format_sequence(seq) + "\n")
    return 0


def cmd_table(args, out):
    rows = an.reproduce_table(args.which, args.source, args.as_printed)
    if args.format == "gnuplot":
        if args.exact:
            out.write("".join(f"{r.k} {an.fmt_fraction(r.ratio)}\n" for r in rows))
        else:
            out.write(an.gnuplot_dump(rows))
    else:
        out.write(an.table_csv(rows))
    return 0


def cmd_ratio(args, out):
    if args.sweep_q:
        l = args.l
        lo = max(1, math.ceil(math.log2(l)))
        out.write("l k q numerator denominator ratio\n")
        for k in args.k:
            for row in an.mtp_sweep(l, k, range(lo, middle(l) + 1)):
                out.write(f"{l} {k} {row.q} {row.alg_cost} {row.stat_cost} "
                          f"{_ratio_text(row.ratio, args.digits, args.exact)}\n")
        return 0
    rule = _rule(args.rule, args.l)
    initial = ListState.range(args.l)
    alg_costs, off_costs, rows = [], [], []
    for k in args.k:
        if rule.kind == "MTP":
            sigma = cruel_mtp(rule.q, args.l, k, initial)
        else:
            sigma = cruel_mfm(CruelSpec(args.l, k, args.case), initial)
        alg = total_cost(rule, initial, sigma)
        if args.offline == "stat":
            off = stat_paper(initial, sigma, args.tie_break).total
        elif args.offline == "stat-exact":
            off = stat_exact(initial, sigma).total
        elif args.offline == "dynopt":
            off = dyn_opt(initial, sigma).total
        else:
            off = true_opt(initial, sigma).total
        alg_costs.append(alg)
        off_costs.append(off)
        rows.append(an.RatioRow(args.l, k, alg, off, args.digits))
    if args.format == "gnuplot":
        for r in rows:
            out.write(f"{r.k} {an.fmt_fraction(r.ratio) if args.exact else format(float(r.ratio), '.10g')}\n")
    else:
        out.write("l k numerator denominator ratio\n")
        for r in rows:
            out.write(f"{r.l} {r.k} {r.numerator} {r.denominator} {_ratio_text(r.ratio, args.digits, args.exact)}\n")
    if args.check is not None:
        v = an.check_competitive(alg_costs, off_costs, Fraction(args.check), args.beta, labels=args.k)
        status = "holds" if v.holds else f"violated at k={v.first_violation[0]} ({v.first_violation[1]} > {v.d}*{v.first_violation[2]}+{v.beta})"
        out.write(f"competitive d={v.d} beta={v.beta}: {status}\n")
    return 0


def cmd_opt(args, out):
    initial = _initial(args)
    sigma = _sigma(args)
    methods = ["true", "stat-exact", "stat-paper", "dynopt"] if args.method == "all" else [args.method]
    for m in methods:
        if m == "true":
            r = true_opt(initial, sigma)
            out.write(f"true_opt total {r.total} (access {r.access}, paid {r.paid})\n")
            if args.trace:
                for i, s in enumerate(r.steps, 1):
                    out.write(f"  {i} item {s.item} paid {s.paid} list {format_sequence(s.order_before)} "
                              f"found {s.position} moved_to {s.moved_to}\n")
        elif m == "stat-exact":
            p = stat_exact(initial, sigma)
            out.write(f"stat_exact total {p.total} (access {p.access_cost}, paid {p.paid_cost}) "
                      f"order {format_sequence(p.target_order)}\n")
        elif m == "stat-paper":
            p = stat_paper(initial, sigma, args.tie_break)
            out.write(f"stat_paper[{args.tie_break}] total {p.total} (access {p.access_cost}, "
                      f"paid {p.paid_cost}) order {format_sequence(p.target_order)}\n")
        else:
            out.write(f"dyn_opt total {dyn_opt(initial, sigma).total}\n")
    return 0


def cmd_corpus(args, out):
    rules = [_rule(t, None) for t in args.rules.split(",") if t.strip()]
    if not rules:
        raise UsageError("--rules is empty")
    streams = [tokenize(p, args.mode) for p in sorted(args.files)]
    rows = report(streams, rules, workers=args.workers)
    out.write(report_json(rows) if args.format == "json" else report_csv(rows))
    return 0


def cmd_verify(args, out):
    ok = True
    for check in verify_mod.run_all():
        out.write(check.line() + "\n")
        out.flush()
        ok = ok and check.ok
    out.write(("ALL PASS" if ok else "SOME CHECKS FAILED") + "\n")
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="listupdate", description="List-update simulation and competitive-ratio tables")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("simulate", help="serve a request sequence with one online rule")
    s.add_argument("--rule", required=True, help="mtf, trans, fc, mfm, mtp:Q or mflp")
    _add_list_args(s)
    _add_sigma_args(s)
    s.add_argument("--trace", action="store_true", help="print the list after every request")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("cruel", help="emit an adversarial or synthetic request sequence")
    c.add_argument("--adversary", default="mfm", help="mfm, mtp:Q, mflp, trans, mtf, uniform, zipf")
    c.add_argument("--l", type=int)
    _add_list_args(c)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--case", choices=CASES, default="full")
    c.add_argument("--residual", type=int, help="expert: length of the partial tail pass")
    c.add_argument("--n", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--zipf-s", type=float, default=1.0)
    c.set_defaults(func=cmd_cruel)

    t = sub.add_parser("table", help="reproduce a published ratio table as CSV")
    t.add_argument("--which", choices=an.TABLES, required=True)
    t.add_argument("--source", choices=("closed", "simulated"), default="closed")
    t.add_argument("--as-printed", action="store_true",
                   help="case2: use the published closed form verbatim (off-by-one tail sum)")
    t.add_argument("--format", choices=("csv", "gnuplot"), default="csv")
    t.add_argument("--exact", action="store_true", help="gnuplot output with exact rationals")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("ratio", help="ratio of an online rule to an offline baseline on cruel input")
    r.add_argument("--rule", default="mfm")
    r.add_argument("--offline", choices=("stat", "stat-exact", "dynopt", "opt"), default="stat")
    r.add_argument("--tie-break", choices=TIE_BREAKS, default="stable-initial")
    r.add_argument("--l", type=int, required=True)
    r.add_argument("--k", type=int, nargs="+", default=[1])
    r.add_argument("--case", choices=CASES, default="full")
    r.add_argument("--digits", type=int, default=3)
    r.add_argument("--exact", action="store_true")
    r.add_argument("--format", choices=("text", "gnuplot"), default="text")
    r.add_argument("--check", metavar="D", help="test alg <= D * off + beta over the listed k")
    r.add_argument("--beta", type=int, default=0)
    r.add_argument("--sweep-q", action="store_true",
                   help="MTP(q) vs STAT for q from ceil(log2 l) to the middle")
    r.set_defaults(func=cmd_ratio)

    o = sub.add_parser("opt", help="offline costs for a small instance")
    _add_list_args(o)
    _add_sigma_args(o)
    o.add_argument("--method", choices=("all", "true", "stat-exact", "stat-paper", "dynopt"), default="all")
    o.add_argument("--tie-break", choices=TIE_BREAKS, default="stable-initial")
    o.add_argument("--trace", action="store_true")
    o.set_defaults(func=cmd_opt)

    k = sub.add_parser("corpus", help="benchmark rules on files; gain is relative to MTF")
    k.add_argument("files", nargs="+")
    k.add_argument("--mode", choices=MODES, default="bytes")
    k.add_argument("--rules", default="mtf,mfm")
    k.add_argument("--format", choices=("csv", "json"), default="csv")
    k.add_argument("--workers", type=int, default=1)
    k.set_defaults(func=cmd_corpus)

    v = sub.add_parser("verify", help="run the property suite, one PASS/FAIL line each")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"listupdate: usage error: {exc}", file=sys.stderr)
        return 1
    except SizeLimitError as exc:
        print(f"listupdate: size limit: {exc}", file=sys.stderr)
        return 2
    except ItemNotInList as exc:
        print(f"listupdate: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"listupdate: contract violation: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"listupdate: {exc}", file=sys.stderr)
        return 2
    except ListUpdateError as exc:
        print(f"listupdate: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
