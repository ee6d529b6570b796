"""Command-line front end.

    a3zeta eval --tuple 2,2,2,2,2,2 --lattice Q --twist zero
    a3zeta relation --theorem SO6 --p 2 --q 2 --a 2 --b 2 --c 2
    a3zeta verify --theorem PU4 --p 2 --q 2 --a 2 --b 2 --c 2 --s 2
    a3zeta derive --family pnew --k 1 --target A3
    a3zeta suite --paper-examples

Exit status: 0 success, 1 a verification or comparison failed, 2 usage or
domain error.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .errors import A3ZetaError
from .lattice import LatticeLabel, TwistLabel
from .report import ReportDocument, bound_string, export_json, numeric_to_json
from .series.scalar import Precision

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


# -- argument types ------------------------------------------------------------

def _tuple_arg(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(f"expected six comma-separated exponents, got {len(parts)}")
    out = []
    for p in parts:
        try:
            v = float(p)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{p!r} is not a number") from None
        out.append(int(v) if v.is_integer() else v)
    return tuple(out)


def _positive_int(minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v
    return parse


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _s_arg(text: str):
    if text.strip() == "s":
        return "s"
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is neither a number nor 's'") from None
    return int(v) if v.is_integer() else v


def _number_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None


THEOREMS = ("A3", "SU4_lam2", "SO6", "SU4_lam1", "SU4_lam3", "PU4")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec-bits", type=_positive_int(64), default=128, help="mpmath precision (default 128)")
    common.add_argument("--cutoff", type=_positive_int(16), default=400, help="direct-sum cutoff (default 400)")
    common.add_argument("--tol", type=_positive_float, default=1e-6, help="comparison tolerance (default 1e-6)")
    common.add_argument("--json", metavar="PATH", help="also write a JSON report to PATH")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--theorem", choices=THEOREMS, required=True)
    for name in ("p", "q", "a", "b", "c"):
        params.add_argument(f"--{name}", type=_positive_int(1), required=True)

    parser = argparse.ArgumentParser(prog="a3zeta", description="Zeta-functions of the A3 lattices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate a lattice series numerically")
    ev.add_argument("--tuple", type=_tuple_arg, required=True, help="s1,...,s6")
    ev.add_argument("--lattice", choices=[x.value for x in LatticeLabel], default="P")
    ev.add_argument("--twist", choices=[x.value for x in TwistLabel], default="zero")
    ev.add_argument("--golden", action=argparse.BooleanOptionalAction, default=True,
                    help="compare with the stored reference value when one exists")

    rel = sub.add_parser("relation", parents=[common, params], help="print a relation symbolically")
    rel.add_argument("--s", type=_s_arg, default="s", help="value of s (default: symbolic)")

    ver = sub.add_parser("verify", parents=[common, params], help="check a relation numerically")
    ver.add_argument("--s", type=_s_arg, required=True)

    der = sub.add_parser("derive", parents=[common], help="closed form of a collapsed series")
    der.add_argument("--family", choices=["pnew"], default="pnew")
    der.add_argument("--k", type=_positive_int(1), required=True)
    der.add_argument("--target", choices=THEOREMS, default="A3")

    su = sub.add_parser("suite", parents=[common], help="run the acceptance suite")
    su.add_argument("--paper-examples", action="store_true", help="run every acceptance criterion")
    su.add_argument("--only", type=_number_list, help="comma-separated criterion numbers")
    return parser


# -- commands -------------------------------------------------------------------

def _precision(args) -> Precision:
    return Precision(significand_bits=args.prec_bits, cutoff=args.cutoff)


def _pi_fraction(expr) -> str:
    r = expr.as_rational_pi()
    text = expr.pretty()
    if r is not None and r[0].denominator != 1 and "·" in text:
        coeff, rest = text.split("·", 1)
        return f"({coeff})·{rest}"
    return text


def _golden_match(spec, value, tol, prec):
    from .algebra.numeric import expr_eval_numeric
    from .golden import golden_entry, load_golden

    for label, entry in load_golden().items():
        series = entry.get("series")
        if not series:
            continue
        if (tuple(series["tuple"]), series["twist"], series["lattice"]) != \
                (spec.exponents, spec.twist.value, spec.lattice.value):
            continue
        expected = golden_entry(label)
        closed = expr_eval_numeric(expected, prec=prec).value
        target = value.value
        real_only = spec.twist in (TwistLabel.LAM1, TwistLabel.LAM3)
        if real_only:
            target = target.real
        err = float(abs(closed - target) / abs(closed))
        return label, expected, err, err <= tol, real_only
    return None


def cmd_eval(args, out):
    from .series import LatticeSeriesSpec, eval_zeta3

    try:
        spec = LatticeSeriesSpec(args.tuple, args.twist, args.lattice)
    except A3ZetaError as exc:
        raise UsageError("--tuple", str(exc)) from None
    prec = _precision(args)
    value = eval_zeta3(spec, prec)
    body = ",".join(str(x) for x in spec.exponents)
    out.append(f"zeta_3(({body}), {spec.twist.value}; {spec.lattice.value}) = "
               f"{numeric_to_json(value)['re']} + {numeric_to_json(value)['im']}i  (error <= {bound_string(value.error_bound)})")
    result = {"value": numeric_to_json(value)}
    code = EXIT_OK
    provenance = []
    if args.golden:
        match = _golden_match(spec, value, args.tol, prec)
        if match is None:
            out.append("no reference value stored for this series")
        else:
            label, expected, err, ok, real_only = match
            what = "real part " if real_only else ""
            verdict = "matches" if ok else "does not match"
            out.append(f"{what}{verdict} {_pi_fraction(expected)}  [{label}, relative error {err:.2e}]")
            result["golden"] = {"label": label, "expression": expected.to_json(),
                                "relative_error": bound_string(err), "matches": ok, "real_part_only": real_only}
            provenance.append(label)
            code = EXIT_OK if ok else EXIT_FAIL
    return code, result, bound_string(value.error_bound), provenance


def _params(args, s):
    from .relations import RelationParams

    return RelationParams(args.p, args.q, args.a, args.b, args.c, s=s)


def _format_terms(merged) -> list[str]:
    lines = []
    for coef, t in merged.terms:
        body = ",".join(str(x) for x in t)
        lines.append(f"  {coef:+d} * zeta_3({body})")
    return lines or ["  0"]


def cmd_relation(args, out):
    from .algebra.closed_forms import specialize
    from .relations import TheoremId, lhs_terms, merge_terms, theorem_rhs

    th = TheoremId.parse(args.theorem)
    params = _params(args, args.s)
    merged = merge_terms(lhs_terms(params), th)
    rhs = theorem_rhs(th, params.with_s(None))
    out.append(f"theorem {th.value}: twist {th.twist.value}, lattice {th.lattice.value}")
    out.append("left-hand side:")
    out.extend(_format_terms(merged))
    out.append("right-hand side:")
    out.append("  " + (rhs.render() or "0"))
    result = {"lhs": [{"coefficient": c, "exponents": [str(x) for x in t]} for c, t in merged.terms],
              "rhs": rhs.to_json(), "rhs_text": rhs.render()}
    if not params.symbolic:
        if not isinstance(params.s, int):
            raise UsageError("--s", "a symbolic relation can only be specialised at an integer")
        try:
            value = specialize(rhs, params.s)
        except A3ZetaError as exc:
            raise UsageError("--s", str(exc)) from None
        out.append(f"at s = {params.s}:")
        out.append("  " + value.pretty())
        result["specialized"] = value.to_json()
        result["specialized_text"] = value.render()
    return EXIT_OK, result, None, [f"theorem {th.value}"]


def cmd_verify(args, out):
    from .errors import DomainError
    from .relations import TheoremId, verify_relation

    if args.s == "s":
        raise UsageError("--s", "verification needs a numeric value")
    try:
        rep = verify_relation(TheoremId.parse(args.theorem), _params(args, None), args.s,
                              _precision(args), tol=args.tol)
    except DomainError as exc:
        raise UsageError("--p/--q/--a/--b/--c/--s", str(exc)) from None
    out.append(f"{rep.theorem.value} at s = {rep.s_value}: {rep.status}")
    out.append(f"  lhs      {numeric_to_json(rep.lhs)['re']} + {numeric_to_json(rep.lhs)['im']}i")
    out.append(f"  rhs      {numeric_to_json(rep.rhs)['re']} + {numeric_to_json(rep.rhs)['im']}i")
    out.append(f"  residual {rep.residual:.3e} (tolerance {rep.tolerance:g})")
    result = {
        "status": rep.status,
        "passed": rep.passed,
        "degenerate": rep.degenerate,
        "lhs": numeric_to_json(rep.lhs),
        "rhs": numeric_to_json(rep.rhs),
        "residual": bound_string(rep.residual),
        "tolerance": bound_string(rep.tolerance),
        "merged_lhs": [{"coefficient": c, "exponents": [str(x) for x in t]} for c, t in rep.merged],
    }
    bound = bound_string(rep.lhs.error_bound + rep.rhs.error_bound)
    return (EXIT_OK if rep.passed else EXIT_FAIL), result, bound, [f"theorem {rep.theorem.value}"]


def cmd_derive(args, out):
    from .algebra.numeric import expr_eval_numeric
    from .relations import REAL_PART_TARGETS, TheoremId, derive_evaluation

    th = TheoremId.parse(args.target)
    try:
        ev = derive_evaluation(args.k, th)
    except A3ZetaError as exc:
        raise UsageError("--target", str(exc)) from None
    body = ",".join(str(x) for x in ev.exponents)
    head = "Re " if th in REAL_PART_TARGETS else ""
    out.append(f"{head}zeta_3(({body}), {th.twist.value}; {th.lattice.value}) =")
    out.append("  " + ev.value.pretty())
    num = expr_eval_numeric(ev.value, prec=_precision(args))
    out.append(f"  = {numeric_to_json(num)['re']}")
    result = {"exponents": list(ev.exponents), "expression": ev.value.to_json(),
              "text": ev.value.render(), "numeric": numeric_to_json(num),
              "real_part": th in REAL_PART_TARGETS}
    return EXIT_OK, result, bound_string(num.error_bound), [f"theorem {th.value}", "stuffle collapse"]


def cmd_suite(args, out):
    from .acceptance import run_all

    if not args.paper_examples:
        raise UsageError("--paper-examples", "the suite currently has one set; pass --paper-examples")
    results = run_all(_precision(args), args.only)
    for r in results:
        out.append(r.line())
    failed = [r.number for r in results if not r.passed]
    out.append(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    result = {"criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
                            "duration_s": f"{r.duration_s:.3f}"} for r in results]}
    return (EXIT_FAIL if failed else EXIT_OK), result, None, []


COMMANDS = {"eval": cmd_eval, "relation": cmd_relation, "verify": cmd_verify,
            "derive": cmd_derive, "suite": cmd_suite}


def _inputs(args) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("command", "json"):
            continue
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    t0 = time.perf_counter()
    out: list[str] = []
    try:
        code, result, bound, provenance = COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"a3zeta {args.command}: error: argument {exc}", file=sys.stderr)
        return EXIT_USAGE
    except A3ZetaError as exc:
        print(f"a3zeta {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("\n".join(out))
    if args.json:
        doc = ReportDocument(__version__, args.command, _inputs(args), result, bound,
                             (time.perf_counter() - t0) * 1000, tuple(provenance))
        try:
            export_json(doc, args.json)
        except OSError as exc:
            print(f"a3zeta {args.command}: error: argument --json: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
