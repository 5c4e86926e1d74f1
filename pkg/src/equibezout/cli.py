"""Command-line front end.

Subcommands::

    basis P Q M            list the basis of one degree class
    euler P Q BUNDLES      Euler class of a bundle sum, with cross-checks
    compare P Q A B        same bundle data in all three theories
    chart RANGE            ASCII picture of the point ring (even columns)
    verify                 seeded random differential suite

Exit codes: 0 success, 1 mathematical check or context failure,
2 usage/parse error.  ``--json`` switches any command to a JSON object
with the stable field set {command, inputs, ranks, degrees, grading,
coefficients, checks, theory, result}.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import euler as _euler
from . import variants as _variants
from .hscalar import XI, monomials_in_grading
from .parsing import ParseError, parse_bundles
from .projmod import ProjSpace, basis, coeff_vector
from .verify import run_verify

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2


def format_t_scalar(x) -> str:
    """Scalar text preferring the transfer form for even xi multiples.

    16*xi^2 is printed as 8*tau(i^4); anything else falls back to the
    plain normal form.  Both spellings parse back to the same element.
    """
    if len(x.terms) == 1:
        ((mono, coeff),) = x.terms.items()
        if mono.kind == XI and coeff % 2 == 0:
            half = coeff // 2
            body = f"tau(i^{2 * mono.n})"
            if half == 1:
                return body
            if half == -1:
                return f"-{body}"
            return f"{half}*{body}"
    return str(x)


def format_vector(vector) -> str:
    """Coefficient vector as a sum of coeff*P_i terms ("0" when empty)."""
    chunks = []
    for i, coeff in vector:
        if not coeff:
            continue
        text = format_t_scalar(coeff)
        if " + " in text or " - " in text:
            text = f"({text})"
        chunks.append(f"{text}*P{i}")
    if not chunks:
        return "0"
    out = chunks[0]
    for chunk in chunks[1:]:
        out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
    return out


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _envelope(command: str, inputs: dict, **extra) -> dict:
    doc = {
        "command": command,
        "inputs": inputs,
        "ranks": None,
        "degrees": None,
        "grading": None,
        "coefficients": None,
        "checks": None,
        "theory": None,
        "result": None,
    }
    doc.update(extra)
    return doc


def cmd_basis(args) -> int:
    try:
        sp = ProjSpace(args.p, args.q)
    except ValueError:
        print("error: p+q must be positive", file=sys.stderr)
        return EXIT_USAGE
    monos = basis(sp, args.m)
    rows = []
    lines = [f"basis of {sp} in degree class m={args.m}:"]
    for mono in monos:
        m, A, B = mono.mclass, *mono.pos
        rows.append(
            {
                "i": mono.index,
                "monomial": str(mono),
                "position": [A, B],
                "grading": str(mono.grading),
            }
        )
        lines.append(
            f"  P{mono.index} = {mono}   position ({A},{B})   grading {mono.grading}"
        )
    payload = _envelope(
        "basis", {"p": args.p, "q": args.q, "m": args.m}, result=rows
    )
    _emit(payload, args.json, lines)
    return EXIT_OK


def _bundle_sum(p: int, q: int, text: str) -> _euler.BundleSum:
    sp = ProjSpace(p, q)
    return _euler.BundleSum.make(sp, parse_bundles(text))


def cmd_euler(args) -> int:
    try:
        F = _bundle_sum(args.p, args.q, args.bundles)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    violations = _euler.context_check(F)
    inputs = {
        "p": args.p,
        "q": args.q,
        "bundles": str(F),
        "coeffs": args.coeffs,
    }
    if violations:
        payload = _envelope(
            "euler", inputs, theory=args.coeffs,
            checks={"context": False}, result={"violations": violations},
        )
        _emit(payload, args.json, ["context violation:"] + [f"  {v}" for v in violations])
        return EXIT_CHECK

    r = _euler.ranks(F)
    dd = _euler.degrees(F)
    if args.coeffs == "burnside":
        report = _euler.bezout_report(F)
        vector = [
            {"i": i, "scalar": format_t_scalar(c)} for i, c in report.coefficients
        ]
        checks = dict(report.checks)
        lines = [
            f"F = {F} over {F.sp}",
            f"e(F) = {format_vector(report.coefficients)}",
            f"     = {report.product_class}",
            f"ranks: ({r.n_total}, {r.n_fix0}, {r.n_fix1})   "
            f"degrees: ({dd.delta}, {dd.delta0}, {dd.delta1})   "
            f"grading: {report.grading}",
        ]
        grading_text = str(report.grading)
    else:
        grading = _euler.euler_grading(r.n_total, r.n_fix0, r.n_fix1)
        if args.coeffs == "zconst":
            closed = _variants.z_euler_closed(F)
            mapped = _variants.z_map(_euler.euler_product(F))
            vec = coeff_vector(closed, grading.m)
            vector = [{"i": i, "scalar": format_t_scalar(c)} for i, c in vec]
            class_lines = [
                f"e_Z(F) = {format_vector(vec)}",
                f"       = {closed}",
            ]
        else:
            closed = _variants.borel_euler_closed(F)
            mapped = _variants.borel_map(_euler.euler_product(F), r.n_fix1)
            vector = [
                {"i": k, "scalar": str(v)} for k, v in sorted(closed.coeffs.items())
            ]
            class_lines = [f"e_BH(F) = {closed}"]
        checks = {"closed_equals_mapped_product": closed == mapped}
        grading_text = str(grading)
        lines = [f"F = {F} over {F.sp}"] + class_lines + [
            f"ranks: ({r.n_total}, {r.n_fix0}, {r.n_fix1})   "
            f"degrees: ({dd.delta}, {dd.delta0}, {dd.delta1})"
        ]

    ok = all(checks.values())
    lines.append("checks: " + "; ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in checks.items()))
    payload = _envelope(
        "euler",
        inputs,
        ranks=[r.n_total, r.n_fix0, r.n_fix1],
        degrees=[dd.delta, dd.delta0, dd.delta1],
        grading=grading_text,
        coefficients=vector,
        checks=checks,
        theory=args.coeffs,
    )
    _emit(payload, args.json, lines)
    return EXIT_OK if ok else EXIT_CHECK


def cmd_compare(args) -> int:
    try:
        FA = _bundle_sum(args.p, args.q, args.bundles_a)
        FB = _bundle_sum(args.p, args.q, args.bundles_b)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = _variants.compare(FA, FB)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    da, db = report.degrees_a, report.degrees_b
    lines = [
        f"A = {FA}   degrees ({da.delta}, {da.delta0}, {da.delta1})",
        f"B = {FB}   degrees ({db.delta}, {db.delta0}, {db.delta1})",
    ]
    for theory, equal in report.flags.items():
        lines.append(f"{theory}: {'equal' if equal else 'differ'}")
    lines.append(f"note: {report.note}")
    payload = _envelope(
        "compare",
        {"p": args.p, "q": args.q, "A": str(FA), "B": str(FB)},
        degrees={"A": da.as_tuple(), "B": db.as_tuple()},
        checks=report.flags,
        result={"note": report.note},
    )
    _emit(payload, args.json, lines)
    return EXIT_OK


_RANGE_RE = re.compile(r"^\s*(-?\d+)\.\.(-?\d+)\s*$")


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if not m:
        raise ParseError(f"bad range {text!r}; expected LO..HI")
    return int(m.group(1)), int(m.group(2))


def chart_cell(a: int, b: int) -> str:
    """Symbol of the point-ring group in grading a + b*s."""
    marks = {(0, 1): "e", (-2, 2): "x", (2, -2): "t", (0, -1): "k"}
    if (a, b) in marks:
        return marks[(a, b)]
    monos = monomials_in_grading(a, b)
    if len(monos) == 2:
        return "#"  # the Burnside ring itself
    if not monos:
        return "."
    return "o" if monos[0].kind == "exi" else "*"


def chart_lines(a_lo: int, a_hi: int, b_lo: int, b_hi: int) -> list[str]:
    if a_lo > a_hi or b_lo > b_hi:
        return []
    lines = []
    for b in range(b_hi, b_lo - 1, -1):
        cells = " ".join(chart_cell(a, b) for a in range(a_lo, a_hi + 1))
        lines.append(f"{b:>4} | {cells}")
    lines.append("     " + "-" * (2 * (a_hi - a_lo + 1) + 1))
    labels = "       " + " ".join(
        str(abs(a) % 10) if a % 2 == 0 else " " for a in range(a_lo, a_hi + 1)
    )
    lines.append(labels.rstrip())
    lines.append("legend: # Burnside ring, * Z, o Z/2, . zero")
    lines.append("marks: e at (0,1), x=xi at (-2,2), t=tau(i^-2) at (2,-2), k=e^-1*kappa at (0,-1)")
    return lines


def cmd_chart(args) -> int:
    try:
        a_lo, a_hi = _parse_range(args.range)
        b_lo, b_hi = _parse_range(args.brange) if args.brange else (-8, 8)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = chart_lines(a_lo, a_hi, b_lo, b_hi)
    payload = _envelope(
        "chart",
        {"range": args.range, "brange": args.brange},
        result=lines,
    )
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = run_verify(args.seed, args.count, args.pmax, args.qmax, args.dmax)
    result = {
        "seed": summary.seed,
        "requested": summary.requested,
        "executed": summary.executed,
        "passed": summary.passed,
        "failure": None,
        "minimized": None,
    }
    if summary.failure is not None:
        result["failure"] = vars(summary.failure)
        result["minimized"] = vars(summary.shrunk) if summary.shrunk else None
    payload = _envelope(
        "verify",
        {
            "seed": args.seed,
            "count": args.count,
            "pmax": args.pmax,
            "qmax": args.qmax,
            "dmax": args.dmax,
        },
        checks={"suite": summary.ok},
        result=result,
    )
    _emit(payload, args.json, [str(summary)])
    return EXIT_OK if summary.ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equibezout",
        description="Equivariant cohomology of projective spaces and Bezout checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="basis of one degree class")
    p_basis.add_argument("p", type=int)
    p_basis.add_argument("q", type=int)
    p_basis.add_argument("m", type=int)
    p_basis.add_argument("--json", action="store_true")
    p_basis.set_defaults(func=cmd_basis)

    p_euler = sub.add_parser("euler", help="Euler class of a sum of line bundles")
    p_euler.add_argument("p", type=int)
    p_euler.add_argument("q", type=int)
    p_euler.add_argument("bundles", help='e.g. "O(3)+xO(1)" or "4*xO(2)"')
    p_euler.add_argument(
        "--coeffs",
        choices=("burnside", "zconst", "borel"),
        default="burnside",
    )
    p_euler.add_argument("--json", action="store_true")
    p_euler.set_defaults(func=cmd_euler)

    p_cmp = sub.add_parser("compare", help="compare two bundle sums in all theories")
    p_cmp.add_argument("p", type=int)
    p_cmp.add_argument("q", type=int)
    p_cmp.add_argument("bundles_a")
    p_cmp.add_argument("bundles_b")
    p_cmp.add_argument("--json", action="store_true")
    p_cmp.set_defaults(func=cmd_compare)

    p_chart = sub.add_parser("chart", help="ASCII chart of the point ring")
    p_chart.add_argument("range", help="a-range, e.g. -8..8")
    p_chart.add_argument("--brange", help="b-range (default -8..8)")
    p_chart.add_argument("--json", action="store_true")
    p_chart.set_defaults(func=cmd_chart)

    p_verify = sub.add_parser("verify", help="randomized differential suite")
    p_verify.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("EQUIBEZOUT_SEED", "1")),
    )
    p_verify.add_argument("--count", type=int, default=1000)
    p_verify.add_argument("--pmax", type=int, default=6)
    p_verify.add_argument("--qmax", type=int, default=6)
    p_verify.add_argument("--dmax", type=int, default=5)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
