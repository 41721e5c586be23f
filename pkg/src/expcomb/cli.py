"""Command-line entry point: ``expcomb <subcommand> ...``.

Every subcommand writes JSON to stdout (or ``--out``); ``--format csv``
writes a flat table instead.  Exact numbers are serialized as
{"exact": "p/q", "float": x}.  Failures write a JSON error record
{"error": {"type": ..., "message": ...}} to stderr and exit 2 for bad
arguments or parameters ("usage", "invalid_params"), 1 otherwise.

CSV schemas (one header row, then data):
  guess       field,value
  spanning    k,n,trees,two_forests,resistance
  diagmat     n,value
  parking     statistic,count  (or z,density with --scaled; k,factorial_moment with --moments)
  quicksort   n,mean,m2,...    (or exponent,probability with --pgf)
  queens      row,col,colour   for --board; colour,polygon,vertex,x,y for --outline;
              param,value otherwise
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import operator
import sys
from fractions import Fraction
from typing import List, Sequence

import mpmath

from . import diagmat, guess, parking, queens, quicksort, spanning
from .exact import RatFunc, format_scalar, to_scalar

USAGE_ERROR = 2
RUN_ERROR = 1


class CLIError(Exception):
    def __init__(self, kind: str, message: str, code: int = RUN_ERROR):
        super().__init__(message)
        self.kind, self.message, self.code = kind, message, code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError("usage", f"{self.prog}: {message}", USAGE_ERROR)


# ------------------------------------------------------------ serialization


def num(x):
    """Exact scalar as {"exact", "float"}; plain floats pass through."""
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return {"exact": format_scalar(x), "float": float(x)}
    if isinstance(x, mpmath.mpf):
        return {"exact": None, "float": float(x), "digits": mpmath.nstr(x, 20)}
    return {"exact": None, "float": float(x)}


def _flat(x):
    # CSV cell: exact string when available
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return format_scalar(x)
    return x


def _rat(f: RatFunc) -> dict:
    return {"gf": f.to_str(), **f.to_json()}


def _parse_list(text: str, conv=to_scalar) -> list:
    try:
        return [conv(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise CLIError("usage", f"cannot parse list {text!r}: {e}", USAGE_ERROR)


def _parse_range(text: str) -> range:
    """"5" or "1:10" (inclusive)."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise CLIError("usage", f"cannot parse range {text!r}; use N or LO:HI", USAGE_ERROR)


_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.Pow: operator.pow}


def parse_surd(text: str):
    """Evaluate a closed form such as "(3-sqrt(3))/4" to 40 digits.

    Only numbers, + - * / ** and sqrt are accepted.  Pure rationals stay
    exact Fractions.
    """

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return Fraction(node.value) if isinstance(node.value, int) else mpmath.mpf(str(node.value))
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            a, b = ev(node.left), ev(node.right)
            if isinstance(a, Fraction) and isinstance(b, Fraction) and isinstance(node.op, ast.Pow):
                if b.denominator != 1:
                    a = mpmath.mpf(a.numerator) / a.denominator
            elif isinstance(a, Fraction) != isinstance(b, Fraction):
                a, b = [mpmath.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else v for v in (a, b)]
            return _OPS[type(node.op)](a, b)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id == "sqrt" and len(node.args) == 1):
            v = ev(node.args[0])
            return mpmath.sqrt(mpmath.mpf(v.numerator) / v.denominator if isinstance(v, Fraction) else v)
        raise CLIError("usage", f"unsupported expression in {text!r}", USAGE_ERROR)

    with mpmath.workdps(40):
        try:
            return ev(ast.parse(text.strip(), mode="eval"))
        except SyntaxError:
            raise CLIError("usage", f"cannot parse {text!r}", USAGE_ERROR)


# ------------------------------------------------------------ subcommands


def cmd_guess(args):
    seq = _parse_list(args.seq)
    if args.holonomic:
        rec = guess.find_rec(seq, args.max_c, start=args.start)
        if rec is None:
            raise CLIError("not_found", "no recurrence with order + degree <= max-c")
        payload = {"recurrence": str(rec), "order": rec.order, "degree": rec.degree,
                   "coefficients": [p.to_json() for p in rec.coeff_polys], "valid_from": rec.valid_from}
        return payload, [("recurrence", str(rec))]
    spec = guess.guess_rec(seq)
    if spec is None:
        raise CLIError("not_found", "no C-finite recurrence fits; supply more terms")
    f = guess.c_to_r(spec, offset=args.start)
    payload = {
        "initial": [num(x) for x in spec.initial],
        "rec": [num(x) for x in spec.coeffs],
        "gf": f.to_str() if f is not None else None,
    }
    rows = [("initial", " ".join(format_scalar(x) for x in spec.initial)),
            ("rec", " ".join(format_scalar(x) for x in spec.coeffs)),
            ("gf", payload["gf"])]
    return payload, rows


def cmd_spanning(args):
    if args.gf:
        f = {"trees": spanning.gf_spanning_grid, "two-forests": spanning.gf_two_forest_grid,
             "vertical": spanning.ver_gf}[args.gf](args.k)
        payload = {"k": args.k, "kind": args.gf, **_rat(f)}
        return payload, [("k", args.k), ("kind", args.gf), ("gf", f.to_str())]
    rows, table = [], []
    for n in _parse_range(args.n):
        trees = spanning.spanning_count_grid(args.k, n)
        forests = spanning.two_forest_count_grid(args.k, n)
        res = spanning.joint_resistance(args.k, n) if args.k * n > 1 else None
        rows.append({"k": args.k, "n": n, "trees": num(trees), "two_forests": num(forests),
                     "resistance": num(res) if res is not None else None})
        table.append((args.k, n, trees, forests, res if res is not None else ""))
    return {"rows": rows, "resistance_bound_constant": num(spanning.resistance_bound_constant(args.k))}, table


def cmd_diagmat(args):
    row, col = _parse_list(args.row), _parse_list(args.col)
    seq = diagmat.det_sequence(row, col, 1, args.dims, args.mode)
    sym, states = diagmat.gf_symbolic(row, col, args.mode)
    payload = {"mode": args.mode, "row": [num(x) for x in row], "col": [num(x) for x in col],
               "symbolic": _rat(sym), "states": states,
               "sequence": [num(x) for x in seq]}
    try:
        fam = diagmat.gf_family(row, col, args.mode, n=args.terms)
        payload["guessed"] = _rat(fam)
        payload["agree"] = fam == sym
    except ValueError as e:
        payload["guessed"] = None
        payload["guess_error"] = str(e)
    return payload, [(n, v) for n, v in enumerate(seq, 1)]


def cmd_parking(args):
    n, a = args.n, args.a
    if args.bijection is not None:
        p = tuple(_parse_list(args.bijection, int))
        if len(p) != n:
            raise CLIError("usage", f"--bijection needs {n} entries", USAGE_ERROR)
        f = parking.parking_to_forest(p, a)
        back = parking.forest_to_parking(f)
        payload = {"parking": list(p), "parent": {str(k): v for k, v in sorted(f.parent.items())},
                   "round_trip": list(back) == list(p)}
        return payload, [(k, v) for k, v in sorted(f.parent.items())]
    if args.moments:
        fm = [parking.factorial_moment(k, n, a) for k in range(1, args.moments + 1)]
        payload = {"n": n, "a": a, "count": num(parking.count_parking(n, a)),
                   "factorial_moments": [num(x) for x in fm],
                   "expected_sum": num(parking.expectation_sum(n, a))}
        return payload, [(k, x) for k, x in enumerate(fm, 1)]
    raw, scaled = parking.distribution_rows(n, a)
    payload = {"n": n, "a": a, "count": num(parking.count_parking(n, a)),
               "area_counts": [[s, c] for s, c in raw]}
    if args.scaled:
        payload["scaled"] = [[z, d] for z, d in scaled]
        return payload, scaled
    return payload, raw


def cmd_quicksort(args):
    v = quicksort.variant_by_name(args.variant)
    if args.mc:
        res = quicksort.mc_run(quicksort.MCConfig(args.n_single(), args.k, args.trials, args.seed))
        return res, [tuple(res.values())]
    if args.pgf:
        n = args.n_single()
        p = quicksort.pgf(v, n)
        payload = {"variant": v.name if not v.k else f"{v.name}:{v.k}", "n": n, "pgf": p.to_str(),
                   "coefficients": [num(c) for c in p.coeffs]}
        return payload, [(e, c) for e, c in enumerate(p.coeffs)]
    if args.scaled:
        n = args.n_single()
        vals = quicksort.scaled_moments(v, n, args.scaled)
        payload = {"variant": v.name, "n": n, "scaled": {str(r): x for r, x in enumerate(vals, 3)}}
        return payload, [(r, x) for r, x in enumerate(vals, 3)]
    r = args.moments
    rows, table = [], []
    for n in _parse_range(args.n):
        ms = quicksort.moments(v, n, r)
        row = {"n": n, "mean": num(ms[0])}
        for j in range(2, r + 1):
            row["var" if j == 2 else f"m{j}"] = num(ms[j - 1])
        rows.append(row)
        table.append((n, *ms))
    return {"variant": v.name, "rows": rows}, table


def _rationalize(x: float, tol=1e-7):
    q = Fraction(x).limit_denominator(1000)
    return q if abs(float(q) - x) < tol else None


def cmd_queens(args):
    fam = queens.family_by_name(args.family)
    names = fam.params
    if args.optimize:
        res = queens.optimize(fam, args.starts, seed=args.seed)
        qs = [_rationalize(x) for x in res.params]
        exact = None
        if all(q is not None for q in qs):
            try:
                ap = queens.areas(fam, qs)
                if ap.white == ap.black and ap.warning is None:
                    exact = ap
            except queens.InfeasibleParams:
                pass
        payload = {"family": fam.name}
        if exact is not None:
            payload.update({n: format_scalar(q) for n, q in zip(names, qs)})
            payload["area"] = format_scalar(exact.white)
            payload["area_float"] = float(exact.white)
        else:
            payload.update({n: x for n, x in zip(names, res.params)})
            payload["area"] = res.value
        payload["white"], payload["black"] = res.white, res.black
        payload["starts"], payload["converged"] = res.starts, res.converged
        return payload, [(n, payload[n]) for n in names] + [("area", payload["area"])]
    if args.params is None:
        raise CLIError("usage", "give --params or --optimize", USAGE_ERROR)
    raw = [s for s in args.params.split(",") if s.strip()]
    params = [parse_surd(s) for s in raw]
    if args.board:
        p = queens.rasterize(fam, params, args.board)
        black = queens.discrete_black_count(p)
        payload = {"family": fam.name, "n": args.board, "white": p.count, "black": black,
                   "value": min(p.count, black), "board": queens.board_ascii(p).split("\n")}
        free = ~queens.attacked(p)
        rows = [(r, c, "white" if p.white >> (r * p.n + c) & 1 else "black")
                for r in range(p.n) for c in range(p.n)
                if p.white >> (r * p.n + c) & 1 or free >> (r * p.n + c) & 1]
        return payload, rows
    if args.outline:
        rows = queens.outline_rows(fam, params)
        return {"family": fam.name, "outline": [list(r) for r in rows]}, rows
    if args.verify:
        rep = queens.verify_candidate(fam, params)
        payload = {"family": fam.name, "params": dict(zip(names, map(num, params))),
                   "white": num(rep.white), "black": num(rep.black), "value": num(rep.value),
                   "balanced": rep.balanced, "stationary": rep.stationary,
                   "max_improvement": num(rep.max_improvement), "warning": rep.warning}
        return payload, [("value", _flat(rep.value)), ("balanced", rep.balanced),
                         ("stationary", rep.stationary)]
    ap = queens.areas(fam, params)
    payload = {"family": fam.name, "params": dict(zip(names, map(num, params))),
               "white": num(ap.white), "black": num(ap.black), "warning": ap.warning}
    if all(isinstance(x, Fraction) for x in params):
        ex = queens.exact_areas(fam, params)
        payload["exact_black"] = num(ex.black)
    return payload, [("white", _flat(ap.white)), ("black", _flat(ap.black))]


# ------------------------------------------------------------ wiring

CSV_HEADERS = {
    "guess": ("field", "value"),
    "spanning": ("k", "n", "trees", "two_forests", "resistance"),
    "diagmat": ("n", "value"),
    "quicksort": None,
    "parking": None,
    "queens": None,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="expcomb", description=__doc__.split("\n\n")[0],
                formatter_class=argparse.RawDescriptionHelpFormatter, epilog=__doc__.split("\n\n", 1)[1])
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("guess", parents=[common], help="guess a recurrence from terms")
    g.add_argument("--seq", required=True, help="comma-separated terms, e.g. 1,4,15,56")
    g.add_argument("--start", type=int, default=1, help="index of the first term (default 1)")
    g.add_argument("--holonomic", action="store_true", help="polynomial-coefficient recurrence")
    g.add_argument("--max-c", type=int, default=8, help="max order + degree for --holonomic")
    g.set_defaults(run=cmd_guess)

    s = sub.add_parser("spanning", parents=[common], help="spanning trees of k x n grids")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", default="1:10", help="N or LO:HI")
    s.add_argument("--gf", choices=("trees", "two-forests", "vertical"), help="generating function instead")
    s.set_defaults(run=cmd_spanning)

    d = sub.add_parser("diagmat", parents=[common], help="banded Toeplitz determinants/permanents")
    d.add_argument("--row", required=True, help="first row, e.g. 2,3")
    d.add_argument("--col", required=True, help="first column, e.g. 2,4,5")
    d.add_argument("--mode", choices=(diagmat.DET, diagmat.PERM), default=diagmat.DET)
    d.add_argument("--terms", type=int, default=30, help="terms used for guessing")
    d.add_argument("--dims", type=int, default=12, help="sequence terms to report")
    d.set_defaults(run=cmd_diagmat)

    k = sub.add_parser("parking", parents=[common], help="a-parking functions")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--a", type=int, default=1)
    k.add_argument("--moments", type=int, help="factorial moments of the area up to this order")
    k.add_argument("--scaled", action="store_true", help="standardized area histogram")
    k.add_argument("--bijection", help="map a parking function (comma list) to its forest")
    k.set_defaults(run=cmd_parking)

    q = sub.add_parser("quicksort", parents=[common], help="Quicksort variant distributions")
    q.add_argument("--variant", default="NullaComparisons", help=", ".join(quicksort.VARIANT_NAMES))
    q.add_argument("--n", default="1:10", help="N or LO:HI")
    q.add_argument("--moments", type=int, default=2, help="report mean and central moments up to this order")
    q.add_argument("--pgf", action="store_true", help="coefficients of P_n")
    q.add_argument("--scaled", type=int, help="standardized moments 3..R at n")
    q.add_argument("--mc", action="store_true", help="Monte Carlo k-pivot comparison count")
    q.add_argument("--k", type=int, default=3, help="pivots for --mc")
    q.add_argument("--trials", type=int, default=1000)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(run=cmd_quicksort)

    z = sub.add_parser("queens", parents=[common], help="continuous peaceable queens")
    z.add_argument("--family", required=True, help=", ".join(queens.FAMILIES))
    z.add_argument("--params", help="comma list; rationals or closed forms like (3-sqrt(3))/4")
    z.add_argument("--optimize", action="store_true")
    z.add_argument("--starts", type=int, default=20)
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--verify", action="store_true", help="check balance and stationarity at --params")
    z.add_argument("--board", type=int, help="rasterize on an n x n board")
    z.add_argument("--outline", action="store_true", help="region outlines for plotting")
    z.set_defaults(run=cmd_queens)
    return p


def _emit(args, payload, rows) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header = CSV_HEADERS.get(args.command) or _csv_header(args, payload, rows)
    w.writerow(header)
    for r in rows:
        w.writerow([_flat(x) for x in r])
    return buf.getvalue()


def _csv_header(args, payload, rows) -> Sequence[str]:
    if args.command == "parking":
        if args.bijection is not None:
            return ("vertex", "parent")
        if args.moments:
            return ("k", "factorial_moment")
        return ("z", "density") if args.scaled else ("statistic", "count")
    if args.command == "quicksort":
        if args.mc:
            return tuple(payload)
        if args.pgf:
            return ("exponent", "probability")
        if args.scaled:
            return ("r", "scaled_moment")
        return ("n", "mean") + tuple("var" if j == 2 else f"m{j}" for j in range(2, args.moments + 1))
    if args.command == "queens":
        if args.board:
            return ("row", "col", "colour")
        if args.outline:
            return ("colour", "polygon", "vertex", "x", "y")
        return ("param", "value")
    return ()


def run(argv: List[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)

        def n_single():
            r = _parse_range(args.n)
            if len(r) != 1:
                raise CLIError("usage", "this mode needs a single --n", USAGE_ERROR)
            return r[0]

        args.n_single = n_single
        payload, rows = args.run(args)
        text = _emit(args, payload, rows)
    except CLIError as e:
        return _fail(e.kind, e.message, e.code)
    except ValueError as e:
        # every precondition check raises ValueError (or a subclass)
        return _fail("invalid_params", str(e), USAGE_ERROR, type(e).__name__)
    except (RuntimeError, ZeroDivisionError) as e:
        return _fail("runtime", str(e), RUN_ERROR, type(e).__name__)
    except Exception as e:  # anything else still gets a structured record
        return _fail("internal", f"{type(e).__name__}: {e}", RUN_ERROR)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _fail(kind: str, message: str, code: int, detail: str | None = None) -> int:
    record = {"type": kind, "message": message}
    if detail:
        record["detail"] = detail
    sys.stderr.write(json.dumps({"error": record}) + "\n")
    return code


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
