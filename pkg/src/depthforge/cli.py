"""Command-line front end.

Grammar: ``depthforge <group> <command> [flags]`` with groups

* ``period basis|check``   -- period-polynomial spaces and membership
* ``depth matrix|relations`` -- depth-2 bracket matrix and its kernel
* ``verify brown|bernsum|eigen|cgshape`` -- the verification pipelines
* ``eis qexp|hecke|factor`` -- q-expansions and the Hecke operator
* ``rep decompose|bigrade`` -- GL2 character calculus
* ``bern number|poly|dist`` -- Bernoulli utilities

Reports are deterministic (byte-identical for identical configs): JSON with
a top-level ``"schema": 1``, or CSV with one row per case via ``--format
csv``.  Exit status: 0 all checks passed, 1 a verification failed, 2 invalid
flags or values, 3 output could not be written.  The environment variable
``DEPTHFORGE_MAX_WEIGHT`` caps the batch weight range of ``verify brown``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import depthlie, eisenstein, periodpoly, repcalc

DEFAULT_MIN_WEIGHT = 6
DEFAULT_MAX_WEIGHT = 30
MAX_WEIGHT_ENV = "DEPTHFORGE_MAX_WEIGHT"

STATEMENTS = {
    "period basis": "basis of the space of restricted even period polynomials",
    "period check": "the four defining identities of restricted even period polynomials",
    "depth matrix": "depth-2 Ihara bracket matrix over canonical generator pairs",
    "depth relations": "kernel of the depth-2 bracket matrix (generator relations)",
    "verify brown": "depth-2 bracket relations match restricted even period polynomials",
    "verify bernsum": "GL2(F_p)-wide reduction of the restricted Bernoulli double sum to a line sum",
    "verify eigen": "Eisenstein series is a T_p-eigenform with eigenvalue 1 + p^(weight-1)",
    "verify cgshape": "every component of twisted symmetric-power products is Sym^u(u+1+w) with w >= 1",
    "eis qexp": "q-expansion coefficients",
    "eis hecke": "Hecke operator T_p on a q-expansion",
    "eis factor": "the scalar 1 - a_p + p^(2m+1) and the Weil bound",
    "rep decompose": "tensor product decomposition into irreducible characters",
    "rep bigrade": "bigraded dimensions of a character",
    "bern number": "Bernoulli number",
    "bern poly": "Bernoulli polynomial",
    "bern dist": "Bernoulli distribution relation",
}


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    # registered on the top level and on every leaf (with SUPPRESS defaults,
    # so whichever position the user picks wins and the other stays silent)
    parser.add_argument(
        "--format", choices=("json", "csv"), default=argparse.SUPPRESS, help="report format"
    )
    parser.add_argument(
        "--out", metavar="PATH", default=argparse.SUPPRESS, help="write the report to PATH instead of stdout"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="depthforge",
        description="Exact verification pipelines for depth-graded Lie algebra relations, "
        "period polynomials, Eisenstein q-expansions and GL2 characters.",
    )
    _add_output_flags(parser)
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    def leaf(group_cmd, name: str, help: str) -> argparse.ArgumentParser:
        sub = group_cmd.add_parser(name, help=help)
        _add_output_flags(sub)
        return sub

    period = groups.add_parser("period", help="restricted even period polynomials")
    period_cmd = period.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(period_cmd, "basis", "solve for a basis at one weight")
    p.add_argument("--weight", type=int, required=True)
    p = leaf(period_cmd, "check", "test a polynomial given as a JSON monomial map")
    p.add_argument("--poly", required=True, metavar="JSON", help='e.g. \'{"x^2*y^8": "1", "x^8*y^2": "-1"}\'')
    p.add_argument("--degree", type=int, help="degree, required only for the empty map")

    depth = groups.add_parser("depth", help="depth-2 bracket computations")
    depth_cmd = depth.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(depth_cmd, "matrix", "the bracket matrix at target weight 2m+2")
    p.add_argument("--m", type=int, required=True)
    p = leaf(depth_cmd, "relations", "kernel of the bracket matrix")
    p.add_argument("--m", type=int, required=True)

    verify = groups.add_parser("verify", help="verification pipelines")
    verify_cmd = verify.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(verify_cmd, "brown", "bracket kernel vs period space, one weight or a range")
    p.add_argument("--weight", type=int, help="single even weight (omit for a batch run)")
    p.add_argument("--min-weight", type=int, default=DEFAULT_MIN_WEIGHT)
    p.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    p = leaf(verify_cmd, "bernsum", "Bernoulli double-sum chain over all of GL2(F_p)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--entry", choices=("c", "d"), default="d", help="entry feeding the line sum")
    p = leaf(verify_cmd, "eigen", "Eisenstein T_p eigenvalue check")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec", type=int, default=60)
    p = leaf(verify_cmd, "cgshape", "component-shape sweep over twisted symmetric powers")
    p.add_argument("--max-sym", type=int, default=6)
    p.add_argument("--max-twist", type=int, default=3)

    eis = groups.add_parser("eis", help="q-expansions")
    eis_cmd = eis.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(eis_cmd, "qexp", "Eisenstein series (or the discriminant form)")
    p.add_argument("--weight", type=int)
    p.add_argument("--delta", action="store_true", help="the weight-12 cusp form instead")
    p.add_argument("--prec", type=int, default=10)
    p = leaf(eis_cmd, "hecke", "apply T_p and report the eigenvalue")
    p.add_argument("--weight", type=int)
    p.add_argument("--delta", action="store_true")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec", type=int, default=60)
    p = leaf(eis_cmd, "factor", "1 - a_p + p^(2m+1) on an eigenform")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weight", type=int, help="Eisenstein weight (with --eisenstein)")
    p.add_argument("--eisenstein", action="store_true", help="allow a noncuspidal eigenform")
    p.add_argument("--prec", type=int, help="q-expansion precision (default: enough for T_p)")

    rep = groups.add_parser("rep", help="GL2 character calculus")
    rep_cmd = rep.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(rep_cmd, "decompose", "decompose a tensor product of irreducibles")
    p.add_argument("--labels", required=True, metavar="LIST", help='comma-separated, e.g. "Sym2(3),Sym4(5)"')
    p = leaf(rep_cmd, "bigrade", "bigraded dimensions of a product character")
    p.add_argument("--labels", required=True, metavar="LIST")

    bern = groups.add_parser("bern", help="Bernoulli numbers and polynomials")
    bern_cmd = bern.add_subparsers(dest="command", required=True, metavar="CMD")
    p = leaf(bern_cmd, "number", "B_n")
    p.add_argument("--n", type=int, required=True)
    p = leaf(bern_cmd, "poly", "coefficients of B_n(X), optionally evaluated")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", metavar="Q", help="rational point to evaluate at, e.g. 1/3")
    p = leaf(bern_cmd, "dist", "check the distribution relation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", metavar="Q", default="0", help="rational base point")

    return parser


# -- handlers: each returns (cases, ok) -------------------------------------


def _cmd_period_basis(args):
    space = periodpoly.period_space(args.weight)
    case = {
        "weight": space.weight,
        "dim": space.dim,
        "basis": [poly.to_json_obj() for poly in space.basis],
    }
    return [case], True


def _cmd_period_check(args):
    data = json.loads(args.poly)
    poly = periodpoly.BivarPoly.from_json_obj(data, degree=args.degree)
    result = periodpoly.is_period_poly(poly)
    case = {
        "degree": poly.degree,
        "is_period_poly": result.ok,
        "failed": result.failed,
    }
    return [case], result.ok


def _cmd_depth_matrix(args):
    matrix = depthlie.bracket_matrix(args.m)
    case = {
        "m": args.m,
        "weight": 2 * args.m + 2,
        "pairs": [list(pair) for pair in periodpoly.candidate_pairs(args.m)],
        "rows": matrix.rows,
        "cols": matrix.cols,
        "row_words": ["".join(map(str, w)) for w in depthlie.depth2_word_basis(2 * args.m + 2)],
        "matrix": matrix.to_strings(),
    }
    return [case], True


def _cmd_depth_relations(args):
    kernel = depthlie.relation_kernel(args.m)
    case = {
        "m": args.m,
        "weight": 2 * args.m + 2,
        "kernel_dim": len(kernel),
        "relations": [pc.to_json_obj() for pc in kernel],
    }
    return [case], True


def _brown_case(m: int) -> dict:
    report = depthlie.verify_brown_criterion(m)
    case = report.to_json_obj()
    case["match"] = report.matches
    return case


def _cmd_verify_brown(args):
    if args.weight is not None:
        if args.weight % 2 != 0 or args.weight < 6:
            raise ValueError("--weight must be an even integer >= 6")
        cases = [_brown_case((args.weight - 2) // 2)]
    else:
        low, high = args.min_weight, args.max_weight
        env_cap = os.environ.get(MAX_WEIGHT_ENV)
        if env_cap is not None:
            high = min(high, int(env_cap))
        if low % 2 != 0 or low < 6 or high < low:
            raise ValueError("bad weight range [%d, %d]" % (low, high))
        cases = [_brown_case((w - 2) // 2) for w in range(low, high + 1, 2)]
    return cases, all(c["match"] for c in cases)


def _cmd_verify_bernsum(args):
    chain = eisenstein.check_bernoulli_sum_chain(args.k, args.p, entry=args.entry)
    case = {
        "k": chain.k,
        "p": chain.p,
        "entry": chain.entry,
        "matrices_checked": chain.checked,
        "holds": chain.ok,
        "first_failure": list(chain.first_failure) if chain.first_failure else None,
    }
    return [case], chain.ok


def _cmd_verify_eigen(args):
    series = eisenstein.eisenstein_qexp(args.weight, args.prec)
    eigenvalue = eisenstein.hecke_eigenvalue(series, args.p)
    expected = Fraction(1 + args.p ** (args.weight - 1))
    case = {
        "weight": args.weight,
        "p": args.p,
        "prec": args.prec,
        "eigenvalue": str(eigenvalue),
        "expected": str(expected),
        "match": eigenvalue == expected,
    }
    return [case], case["match"]


def _cmd_verify_cgshape(args):
    products = 0
    components = 0
    shapes_ok = True
    forbidden_absent = True
    for n1 in range(args.max_sym + 1):
        for n2 in range(args.max_sym + 1):
            for r1 in range(args.max_twist + 1):
                for r2 in range(args.max_twist + 1):
                    labels = [
                        repcalc.IrrepLabel(n1, n1 + 1 + r1),
                        repcalc.IrrepLabel(n2, n2 + 1 + r2),
                    ]
                    decomp = repcalc.tensor_decompose(labels)
                    products += 1
                    components += len(decomp)
                    if not all(c.v - c.u - 1 >= 1 for c in decomp):
                        shapes_ok = False
                    for n in range(1, (n1 + n2) // 2 + 1):
                        if not repcalc.check_no_eisenstein_component(n, labels):
                            forbidden_absent = False
    case = {
        "max_sym": args.max_sym,
        "max_twist": args.max_twist,
        "products_checked": products,
        "components_checked": components,
        "shapes_ok": shapes_ok,
        "forbidden_absent": forbidden_absent,
    }
    return [case], shapes_ok and forbidden_absent


def _series_from_args(args) -> tuple[str, "eisenstein.QExpansion"]:
    if args.delta:
        if args.weight not in (None, 12):
            raise ValueError("--delta fixes the weight to 12")
        return "delta", eisenstein.delta_qexp(args.prec)
    if args.weight is None:
        raise ValueError("one of --weight or --delta is required")
    return "eisenstein", eisenstein.eisenstein_qexp(args.weight, args.prec)


def _cmd_eis_qexp(args):
    name, series = _series_from_args(args)
    case = {"series": name}
    case.update(series.to_json_obj())
    return [case], True


def _cmd_eis_hecke(args):
    name, series = _series_from_args(args)
    transformed = eisenstein.hecke_tp(series, args.p)
    eigenvalue = eisenstein.hecke_eigenvalue(series, args.p)
    case = {
        "series": name,
        "weight": series.weight,
        "p": args.p,
        "input_prec": series.prec,
        "output_prec": transformed.prec,
        "eigenvalue": str(eigenvalue),
        "coeffs": [str(c) for c in transformed.coeffs],
    }
    return [case], True


def _cmd_eis_factor(args):
    prec = args.prec if args.prec is not None else max(2 * args.p + 2, 16)
    if args.eisenstein:
        if args.weight is None:
            raise ValueError("--eisenstein requires --weight")
        name, series = "eisenstein", eisenstein.eisenstein_qexp(args.weight, prec)
    else:
        if args.weight not in (None, 12):
            raise ValueError("the cusp form used here has weight 12; omit --weight or pass 12")
        name, series = "delta", eisenstein.delta_qexp(prec)
    m = (series.weight - 2) // 2
    result = eisenstein.hecke_factor(series, args.p, m, eisenstein=args.eisenstein)
    case = {"series": name, "weight": series.weight}
    case.update(result.to_json_obj())
    case["nonzero"] = result.value != 0
    ok = case["nonzero"] and result.weil_ok is not False
    if args.eisenstein:
        ok = True  # no nonvanishing claim is made off the cuspidal wing
    return [case], ok


def _parse_labels(text: str) -> list[repcalc.IrrepLabel]:
    labels = [repcalc.IrrepLabel.parse(part) for part in text.split(",") if part.strip()]
    if not labels:
        raise ValueError("empty label list")
    return labels


def _cmd_rep_decompose(args):
    labels = _parse_labels(args.labels)
    decomp = repcalc.tensor_decompose(labels)
    case = {
        "factors": [str(l) for l in labels],
        "components": [str(c) for c in decomp],
        "dimension": sum(c.u + 1 for c in decomp),
    }
    return [case], True


def _cmd_rep_bigrade(args):
    labels = _parse_labels(args.labels)
    char = repcalc.Character.one()
    for label in labels:
        char = char * repcalc.irrep_char(label)
    dims = repcalc.bigraded_dims(char)
    case = {
        "factors": [str(l) for l in labels],
        "dims": {"%d,%d" % grade: dim for grade, dim in sorted(dims.items())},
        "dimension": char.dimension(),
    }
    return [case], True


def _cmd_bern_number(args):
    case = {"n": args.n, "value": str(eisenstein.bernoulli_number(args.n))}
    return [case], True


def _cmd_bern_poly(args):
    poly = eisenstein.bernoulli_polynomial(args.n)
    case = {"n": args.n, "coeffs": [str(c) for c in poly.coeffs]}
    if args.at is not None:
        case["at"] = args.at
        case["value"] = str(poly(Fraction(args.at)))
    return [case], True


def _cmd_bern_dist(args):
    x = Fraction(args.x)
    holds = eisenstein.distribution_check(args.n, args.m, x)
    case = {"n": args.n, "m": args.m, "x": str(x), "holds": holds}
    return [case], holds


HANDLERS = {
    "period basis": _cmd_period_basis,
    "period check": _cmd_period_check,
    "depth matrix": _cmd_depth_matrix,
    "depth relations": _cmd_depth_relations,
    "verify brown": _cmd_verify_brown,
    "verify bernsum": _cmd_verify_bernsum,
    "verify eigen": _cmd_verify_eigen,
    "verify cgshape": _cmd_verify_cgshape,
    "eis qexp": _cmd_eis_qexp,
    "eis hecke": _cmd_eis_hecke,
    "eis factor": _cmd_eis_factor,
    "rep decompose": _cmd_rep_decompose,
    "rep bigrade": _cmd_rep_bigrade,
    "bern number": _cmd_bern_number,
    "bern poly": _cmd_bern_poly,
    "bern dist": _cmd_bern_dist,
}


def _render_json(envelope: dict) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def _flatten(value) -> object:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return json.dumps(value, sort_keys=True)


def _render_csv(cases: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    fields = list(cases[0].keys())
    writer.writerow(fields)
    for case in cases:
        writer.writerow([_flatten(case.get(f)) for f in fields])
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "json")
    out_path = getattr(args, "out", None)
    command = "%s %s" % (args.group, args.command)
    try:
        cases, ok = HANDLERS[command](args)
    except (ValueError, json.JSONDecodeError) as exc:
        print("depthforge: error: %s" % exc, file=sys.stderr)
        return 2
    if fmt == "csv":
        text = _render_csv(cases)
    else:
        envelope = {
            "schema": 1,
            "command": command,
            "statement": STATEMENTS[command],
            "ok": ok,
        }
        if len(cases) == 1:
            envelope.update(cases[0])
        else:
            envelope["cases"] = cases
        text = _render_json(envelope)
    try:
        if out_path:
            with open(out_path, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print("depthforge: cannot write report: %s" % exc, file=sys.stderr)
        return 3
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
