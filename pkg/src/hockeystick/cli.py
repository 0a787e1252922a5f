"""Command-line entry point: ``hockeystick <subcommand> ...``.

Exit codes: 0 success, 1 a verification or audit check failed, 2 bad
arguments or an enumeration-budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identity
from .exact_core import Composition, binomial, composition_universe
from .involution import (classify, enumerate_universe, fixed_points, audit as run_audit,
                         universe_size)
from .lattice import LatticeSequence, enumerate_sequences, path_stats, phi, psi
from .render import RenderSpec, render
from .tableau import enumerate_tableaux


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells) + "\n"


def cmd_verify(args, out) -> int:
    reports = []
    for k in range(args.k_max + 1):
        try:
            reports.append(identity.verify(k, args.n, args.r, with_audit=args.audit,
                                           budget=args.budget))
        except identity.BudgetExceeded as exc:
            raise UsageError(f"k={k}: {exc}")
    if args.json:
        out.write(identity.reports_to_json(reports))
    elif args.csv:
        out.write(identity.reports_to_csv(reports))
    else:
        rows = [[rep.k, rep.n, rep.r, rep.lhs, rep.rhs,
                 "-" if rep.weight_sum is None else rep.weight_sum,
                 "-" if rep.universe_size is None else rep.universe_size, rep.status]
                for rep in reports]
        out.write(_table(identity.CSV_COLUMNS, rows))
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_audit(args, out) -> int:
    k, n, r = args.k, args.n, args.r
    size = universe_size(k, n, r)
    if size > identity.DEFAULT_BUDGET:
        raise UsageError(str(identity.BudgetExceeded(size, identity.DEFAULT_BUDGET)))
    res = run_audit(k, n, r, keep_records=bool(args.dump))
    expected = identity.lhs(k, n, r)
    lines = [
        f"params k={k} n={n} r={r}",
        f"universe {res.size}",
        "cases " + " ".join(f"{c}={v}" for c, v in res.case_counts.items()),
        f"fixed {res.fixed}",
        f"weight_sum {res.weight_sum}",
        f"lhs {expected}",
        f"involution {'ok' if not res.involution_failures else 'FAIL'}",
        f"sign_reversal {'ok' if not res.sign_failures else 'FAIL'}",
        f"type_preservation {'ok' if not res.type_failures else 'FAIL'}",
        f"fixed_points {'ok' if not res.fixed_failures else 'FAIL'}",
        f"case_pairing {'ok' if not res.pairing_failures else 'FAIL'}",
    ]
    ok = res.ok and res.weight_sum == expected
    lines.append("status " + ("pass" if ok else "fail"))
    out.write("\n".join(lines) + "\n")
    if args.dump:
        universe = enumerate_universe(k, n, r)
        doc = {"params": {"k": k, "n": n, "r": r},
               "records": [dict(universe[rec.index].to_json(), index=rec.index,
                                case=rec.case.value, mate_index=rec.mate_index)
                           for rec in res.records]}
        with open(args.dump, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    return 0 if ok else 1


def cmd_enumerate(args, out) -> int:
    kind = args.kind

    def need(*names):
        missing = [f"--{nm}" for nm in names if getattr(args, nm) is None]
        if missing:
            raise UsageError(f"--kind {kind} requires {' '.join(missing)}")

    if kind == "compositions":
        need("k", "r")
        items = composition_universe(args.k, args.r)
        as_json = [list(a.parts) for a in items]
    elif kind == "tableaux":
        need("shape", "r")
        try:
            items = enumerate_tableaux(Composition(args.shape), args.r)
        except ValueError as exc:
            raise UsageError(str(exc))
        as_json = [t.to_json() for t in items]
    elif kind == "sequences":
        need("m", "n")
        items = enumerate_sequences(args.m, args.n)
        as_json = [s.to_json() for s in items]
    else:
        need("k", "n", "r")
        size = universe_size(args.k, args.n, args.r)
        if size > args.budget:
            raise UsageError(str(identity.BudgetExceeded(size, args.budget)))
        items = enumerate_universe(args.k, args.n, args.r)
        as_json = [x.to_json() for x in items]
    if args.json:
        out.write(json.dumps(as_json) + "\n")
    else:
        for item in items:
            out.write(f"{item}\n")
    return 0


def cmd_fixed_points(args, out) -> int:
    k, n, r = args.k, args.n, args.r
    points = fixed_points(k, n, r)
    by_omega = {w: [] for w in range(k + 1)}
    for x in points:
        by_omega[classify(x).omega].append(x.sequence)
    expected_total = identity.lhs(k, n, r)
    ok = len(points) == expected_total
    rows = []
    for i in range(k + 1):
        members = by_omega[k - i]
        want = binomial((r + 1) * i + n, i)
        roundtrip = all(psi(phi(L, r, i, n), k, r, i) == L for L in members)
        roundtrip = roundtrip and all(
            phi(psi(L, k, r, i), r, i, n) == L for L in enumerate_sequences(r * i + n, i))
        good = len(members) == want and roundtrip
        ok = ok and good
        rows.append([k - i, i, len(members), want, "ok" if roundtrip else "FAIL",
                     "pass" if good else "fail"])
    out.write(f"params k={k} n={n} r={r}\n")
    out.write(f"fixed_points {len(points)}\n")
    out.write(f"lhs {expected_total}\n")
    if args.by_omega:
        out.write(_table(["omega", "i", "count", "expected", "psi_phi", "status"], rows))
    out.write("status " + ("pass" if ok else "fail") + "\n")
    return 0 if ok else 1


def cmd_oeis(args, out) -> int:
    out.write(" ".join(map(str, identity.oeis_terms(args.r, args.n, args.terms))) + "\n")
    return 0


def cmd_render(args, out) -> int:
    try:
        L = LatticeSequence(args.seq)
    except ValueError as exc:
        raise UsageError(str(exc))
    markers = []
    if args.eta is not None:
        if args.eta > L.width():
            raise UsageError(f"--eta {args.eta} exceeds the width {L.width()}")
        markers.append(args.eta)
        if args.gamma:
            gamma = path_stats(L, args.eta).gamma
            if gamma >= 0:
                markers.append(gamma)
    elif args.gamma:
        raise UsageError("--gamma requires --eta")
    text = render(RenderSpec(L, tuple(markers), args.format))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hockeystick",
                                description="Generalized hockey-stick identity toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check lhs = rhs for k = 0..k-max")
    v.add_argument("--r", type=_nonneg, required=True)
    v.add_argument("--n", type=_nonneg, required=True)
    v.add_argument("--k-max", type=_nonneg, required=True)
    v.add_argument("--audit", action="store_true", help="also enumerate and sum weights")
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    v.add_argument("--budget", type=_positive, default=identity.DEFAULT_BUDGET)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("audit", help="apply tau to every element and check it")
    a.add_argument("--r", type=_nonneg, required=True)
    a.add_argument("--n", type=_nonneg, required=True)
    a.add_argument("--k", type=_nonneg, required=True)
    a.add_argument("--dump", metavar="FILE")
    a.set_defaults(func=cmd_audit)

    e = sub.add_parser("enumerate", help="list compositions, tableaux, sequences or universe")
    e.add_argument("--kind", choices=["compositions", "tableaux", "sequences", "universe"],
                   required=True)
    e.add_argument("--k", type=_nonneg)
    e.add_argument("--n", type=_nonneg)
    e.add_argument("--r", type=_nonneg)
    e.add_argument("--m", type=_nonneg)
    e.add_argument("--shape", type=_int_list)
    e.add_argument("--json", action="store_true")
    e.add_argument("--budget", type=_positive, default=identity.DEFAULT_BUDGET)
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("fixed-points", help="fixed-point census per omega class")
    f.add_argument("--r", type=_nonneg, required=True)
    f.add_argument("--n", type=_nonneg, required=True)
    f.add_argument("--k", type=_nonneg, required=True)
    f.add_argument("--by-omega", action="store_true")
    f.set_defaults(func=cmd_fixed_points)

    o = sub.add_parser("oeis", help="print lhs(k, n, r) for k = 0..terms-1")
    o.add_argument("--r", type=_nonneg, required=True)
    o.add_argument("--n", type=_nonneg, required=True)
    o.add_argument("--terms", type=_positive, required=True)
    o.set_defaults(func=cmd_oeis)

    d = sub.add_parser("render", help="draw a lattice path as SVG or ASCII")
    d.add_argument("--seq", type=_int_list, required=True)
    d.add_argument("--eta", type=_nonneg)
    d.add_argument("--gamma", action="store_true", help="also mark the last ascent west of eta")
    d.add_argument("--format", choices=["svg", "ascii"], required=True)
    d.add_argument("--out", metavar="FILE")
    d.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"hockeystick {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
