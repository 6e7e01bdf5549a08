"""Command-line front end.

Exit codes: 0 success or consistent scan, 1 usage or domain error,
2 conjecture counterexample, 3 precision exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from fracpart import conjectures, even, odd, omega
from fracpart.errors import FracPartError, PrecisionExhausted
from fracpart.render import FORMATS, csv_grid, markdown_grid, render_table

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_PRECISION = 0, 1, 2, 3
THREADS_ENV = "FRACPART_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exact_int(text: str) -> int:
    """Integers given as exact decimals; "12", "1e3" and "12.0" are accepted, "2.5" is not."""
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v.denominator != 1:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(v)


def _int_range(text: str) -> tuple[int, int]:
    """``"5"`` or ``"2..100"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    a = _exact_int(lo)
    b = _exact_int(hi) if sep else a
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _exact_real(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get(THREADS_ENV, os.cpu_count() or 1))


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _emit(fmt: str, header: Sequence[str], rows: list[Sequence], payload) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return csv_grid(header, rows)
    return markdown_grid(header, [[str(c) for c in r] for r in rows], align_right=False)


def cmd_odd_table(args) -> str:
    _require(args, "jmax")
    if not 3 <= args.jmax <= 200:
        raise UsageError("--jmax must lie in 3..200")
    jmin = args.jmin or 3
    kmax = args.kmax or args.jmax - 1
    table = odd.count_table((jmin, args.jmax), (1, kmax), args.h, workers=_threads(args))
    return render_table(table, args.format)


def cmd_odd_count(args) -> str:
    _require(args, "j", "k")
    if args.h is None:
        value = odd.count_all(args.j, args.k)
    else:
        value = odd.count_h(args.j, args.h, args.k)
    payload = {"j": args.j, "k": args.k, "h": args.h, "count": str(value)}
    return _emit(args.format, ["j", "k", "h", "count"], [[args.j, args.k, args.h or "", value]], payload)


def _witness_rows(ws):
    return [[w.k, w.denominator if hasattr(w, "denominator") else w.j, " ".join(map(str, w.numerators)), str(w)] for w in ws]


def cmd_odd_enum(args) -> str:
    _require(args, "j", "k")
    ws = odd.enumerate_partitions(args.j, args.k, args.h, cap=args.cap)
    payload = {"j": args.j, "k": args.k, "h": args.h, "witnesses": [w.to_dict() for w in ws]}
    return _emit(args.format, ["k", "denominator", "numerators", "sum"], _witness_rows(ws), payload)


def cmd_odd_witness(args) -> str:
    _require(args, "j", "k")
    w = odd.construct_witness(args.j, args.k)
    return _emit(args.format, ["k", "denominator", "numerators", "sum"], _witness_rows([w]), w.to_dict())


def cmd_closed_form(args) -> str:
    _require(args, "j", "k")
    value = odd.closed_form_h2(args.j, args.k)
    dp = odd.count_h(args.j, 2, args.k)
    payload = {"j": args.j, "k": args.k, "closedForm": str(value), "count": str(dp), "agree": value == dp}
    return _emit(args.format, ["j", "k", "closed form", "count", "agree"], [[args.j, args.k, value, dp, value == dp]], payload)


def cmd_rascal(args) -> str:
    _require(args, "j")
    rows = [[r, " ".join(map(str, odd.rascal_row(r)))] for r in range(args.j + 1)]
    payload = {"rows": [[str(v) for v in odd.rascal_row(r)] for r in range(args.j + 1)]}
    if args.check:
        ok = odd.rascal_relation_check(args.j)
        payload["relationHolds"] = ok
        rows.append(["relation", ok])
    return _emit(args.format, ["row", "entries"], rows, payload)


def cmd_gaussian(args) -> str:
    _require(args, "j", "h")
    p = odd.shifted_gaussian(args.j, args.h) if args.shifted else odd.gaussian_binomial(args.j, args.h)
    payload = {"j": args.j, "h": args.h, "shifted": args.shifted, "terms": p.to_records()}
    rows = [[e, c] for e, c in sorted(p.items(), reverse=True)]
    if args.format == "md":
        return p.to_text("q") + "\n"
    return _emit(args.format, ["exponent", "coefficient"], rows, payload)


def cmd_bijection_check(args) -> str:
    _require(args, "j")
    hs = [args.h] if args.h is not None else list(range(args.j + 1))
    results = [(h, odd.bijection_check(args.j, h)) for h in hs]
    payload = {"j": args.j, "results": {str(h): ok for h, ok in results}}
    return _emit(args.format, ["j", "h", "holds"], [[args.j, h, ok] for h, ok in results], payload)


def cmd_even_count(args) -> str:
    _require(args, "t")
    lo, hi = args.t
    rows, items = [], []
    for t in range(max(lo, 2), hi + 1):
        f = even.F_E(t)
        scan = len(even.solve_strict(t))
        rows.append([t, even.omega_int(t), f, scan])
        items.append({"t": t, "omega": even.omega_int(t), "F_E": str(f), "scanned": str(scan)})
    return _emit(args.format, ["t", "omega", "F_E", "scanned"], rows, items)


def cmd_even_solve(args) -> str:
    _require(args, "t")
    lo, hi = args.t
    solver = even.solve_relaxed if args.relaxed else even.solve_strict
    sols = [s for t in range(lo, hi + 1) for s in solver(t)]
    return _emit(args.format, ["t", "x", "y"], [[s.t, s.x, s.y] for s in sols], [s.to_dict() for s in sols])


def cmd_even_series(args) -> str:
    _require(args, "t")
    t = args.t[0]
    if args.x is not None or args.y is not None:
        _require(args, "x", "y")
        series = [(args.x, args.y)]
    else:
        series = [(s.x, s.y) for s in even.solve_relaxed(t) if s.x <= even.SERIES_LENGTH_LIMIT]
    rows, payload = [], []
    for x, y in series:
        ws = even.even_series_partitions(t, x, y, args.k)
        rows += [[t, x, y, w.k, " ".join(map(str, w.numerators)), str(w)] for w in ws]
        payload.append({"t": t, "x": x, "y": y, "witnesses": [w.to_dict() for w in ws]})
    return _emit(args.format, ["t", "x", "y", "k", "numerators", "sum"], rows, payload)


def cmd_psi(args) -> str:
    _require(args, "t")
    t = args.t[0]
    if args.x is not None:
        v = even.psi_eval(t, args.x)
        return _emit(args.format, ["t", "x", "psi"], [[t, args.x, v]], {"t": t, "x": args.x, "psi": str(v)})
    roots = [x for x in range(1, t + 1) if even.psi_vanishes(t, x)]
    payload = {"t": t, "roots": roots, "rootCount": len(roots), "omega": even.omega_int(t)}
    return _emit(args.format, ["t", "roots", "root count"], [[t, " ".join(map(str, roots)), len(roots)]], payload)


def cmd_omega(args) -> str:
    _require(args, "z")
    prec = args.precision_bits or omega.default_precision()
    res = omega.omega_cont(omega.parse_complex(args.z, prec), prec)
    d = res.to_dict()
    if args.format == "json":
        return json.dumps(d, indent=2) + "\n"
    with mpmath.workprec(prec):
        row = [args.z, mpmath.nstr(res.value.re, 20), mpmath.nstr(res.value.im, 20), mpmath.nstr(res.err_bound, 3), prec]
    return _emit(args.format, ["z", "re", "im", "errBound", "precisionBits"], [row], d)


def cmd_dirichlet(args) -> str:
    _require(args, "s", "T")
    prec = args.precision_bits or 128
    partial = omega.dirichlet_partial(args.s, args.T, prec)
    ref = omega.zeta_ratio(args.s, prec)
    tail = omega.dirichlet_tail_bound(args.s, args.T, prec)
    with mpmath.workprec(prec):
        vals = [mpmath.nstr(v, 20) for v in (partial, ref, ref - partial, tail)]
    payload = dict(zip(["partial", "zetaRatio", "difference", "tailBound"], vals), s=str(args.s), T=args.T)
    return _emit(args.format, ["s", "T", "partial", "zeta^2(s)/zeta(2s)", "difference", "tail bound"], [[str(args.s), args.T, *vals]], payload)


CONJECTURES = ("modality", "full-modality", *conjectures.SEQUENCES, "custom")


def cmd_conjecture(args) -> tuple[str, int]:
    _require(args, "jmax")
    if args.jmax < 3:
        raise UsageError("--jmax must be at least 3")
    if args.name == "modality":
        report = conjectures.scan_modality(args.jmax)
    elif args.name == "full-modality":
        report = conjectures.ConjectureReport("full-modality", (1, args.jmax))
        report.details = {j: conjectures.scan_full_poly_modality(j) for j in range(1, args.jmax + 1)}
    else:
        if args.name == "custom":
            _require(args, "seq")
            seq = conjectures.custom_sequence(int(a) for a in args.seq.split(","))
        else:
            seq = conjectures.get_sequence(args.name)
        report = conjectures.scan_sequence(seq, args.jmax)
    if args.format == "json":
        out = report.to_json() + "\n"
    elif args.format == "csv":
        out = csv_grid(["j", "result"], [[j, v] for j, v in report.details.items()])
        out += csv_grid(["failure_j", "value"], report.failures) if report.failures else ""
    else:
        out = report.to_text() + "\n"
    return out, EXIT_COUNTEREXAMPLE if report.failures else EXIT_OK


COMMANDS: dict[str, Callable] = {
    "odd-table": cmd_odd_table,
    "odd-count": cmd_odd_count,
    "odd-enum": cmd_odd_enum,
    "odd-witness": cmd_odd_witness,
    "closed-form": cmd_closed_form,
    "rascal": cmd_rascal,
    "gaussian": cmd_gaussian,
    "bijection-check": cmd_bijection_check,
    "even-count": cmd_even_count,
    "even-solve": cmd_even_solve,
    "even-series": cmd_even_series,
    "psi": cmd_psi,
    "omega": cmd_omega,
    "dirichlet": cmd_dirichlet,
    "conjecture": cmd_conjecture,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--j", type=_exact_int)
    common.add_argument("--k", type=_exact_int)
    common.add_argument("--h", type=_exact_int)
    common.add_argument("--t", type=_int_range, help="integer or inclusive range A..B")
    common.add_argument("--x", type=_exact_int)
    common.add_argument("--y", type=_exact_int)
    common.add_argument("--s", type=_exact_real)
    common.add_argument("--T", type=_exact_int, help="number of Dirichlet terms")
    common.add_argument("--z", help="complex input such as 4+i, pi, 2.5")
    common.add_argument("--jmax", type=_exact_int)
    common.add_argument("--jmin", type=_exact_int)
    common.add_argument("--kmax", type=_exact_int)
    common.add_argument("--format", choices=FORMATS, default="md")
    common.add_argument("--precision-bits", type=_exact_int, help=f"overrides ${omega.PRECISION_ENV}")
    common.add_argument("--cap", type=_exact_int, default=odd.DEFAULT_CAP)
    common.add_argument("--threads", type=_exact_int, help=f"overrides ${THREADS_ENV}")

    parser = _Parser(prog="fracpart", description="Partitions of integers into fractions with constant denominators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "rascal":
            p.add_argument("--check", action="store_true", help="also verify the odd-product relation")
        elif name == "gaussian":
            p.add_argument("--shifted", action="store_true", help="multiply by q^(h(h+1)/2)")
        elif name == "even-solve":
            p.add_argument("--relaxed", action="store_true", help="include x = t-1 and x = t")
        elif name == "conjecture":
            p.add_argument("name", choices=CONJECTURES)
            p.add_argument("--seq", help="comma-separated terms for the custom sequence")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except PrecisionExhausted as exc:
        print(f"fracpart: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (UsageError, FracPartError, ValueError, KeyError) as exc:
        print(f"fracpart: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
