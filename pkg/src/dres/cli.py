"""The ``dres`` command line tool.

``dres implicitize FILE`` parses a parametric system, computes its implicit
equation (or characteristic set when the dimension drops), reports the
resultant values, the properness verdict and the inversion maps, and can
cross-check the output against the substitution oracle.

Exit codes: 0 implicit equation found, 2 dimension below n-1 (characteristic
set printed), 1 input error, 3 inconclusive forced method or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .diffpoly import DppeSystem, LinDiffPoly, RANK_RSTAR, canonical_form
from .elimination import (IMPROPER, PROPER, ImplicitResult, char_set_x_part,
                          characteristic_set, echelon, implicitize, inversion_maps,
                          properness, vanishing_oracle)
from .parsing import ParseError, parse_system
from .ratfunc import RatFunc
from .resultant import (COMPLETE, COMPLETE_H, FULL, CoeffMatrix, build_matrix,
                        build_ps, dcres, dcres_h)
from .special import implicit_n2, implicit_n3_const


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dres",
        description="implicitization of linear differential parametric systems over Q(t)")
    sub = parser.add_subparsers(dest="command", required=True)
    imp = sub.add_parser("implicitize", help="compute the implicit equation of a system")
    imp.add_argument("file", help="system file, or - for stdin")
    imp.add_argument("--method", choices=("auto", "cres", "echelon", "n2", "n3const"),
                     default="auto")
    imp.add_argument("--json", action="store_true", help="machine-readable report")
    imp.add_argument("--latex", action="store_true", help="render polynomials in LaTeX")
    imp.add_argument("--show-matrix", action="store_true",
                     help="print the resultant matrices in printed layout")
    imp.add_argument("--check", type=int, metavar="N", default=0,
                     help="verify the output with N random substitutions")
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except ParseError as e:
        print(f"error: {e}", file=_sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=_sys.stderr)
        return 1


def _run(args) -> int:
    if args.file == "-":
        text = _sys.stdin.read()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            print(f"error: cannot read {args.file}: {e}", file=_sys.stderr)
            return 1
    system = parse_system(text)
    res = _dispatch(system, args.method)
    if res is None:
        return 3

    if args.show_matrix and not args.json:
        _print_matrices(system, res)
    if args.json:
        print(json.dumps(_to_json(system, res), indent=2))
    else:
        _print_report(system, res, latex=args.latex)

    if args.check > 0:
        targets = [res.implicit] if res.implicit is not None else list(res.char_set_x)
        base = res.reduced_system or system
        for p in targets:
            if not vanishing_oracle(system, p, args.check) or \
               not vanishing_oracle(base, p, args.check):
                print(f"check failed: {p} does not vanish under the parametrization",
                      file=_sys.stderr)
                return 3
        if not args.json:
            print(f"check: {len(targets)} polynomial(s) passed {args.check} substitution trials")

    return 0 if res.implicit is not None else 2


def _dispatch(system: DppeSystem, method: str) -> ImplicitResult | None:
    if method == "auto":
        return implicitize(system)
    if method == "cres":
        return _forced_cres(system)
    if method == "echelon":
        return _forced_echelon(system)
    gammas, gamma = system.gamma()
    if method == "n2":
        implicit = implicit_n2(system)
    else:
        implicit = canonical_form(implicit_n3_const(system))
    verdict, witnesses = properness(system)
    return ImplicitResult(
        implicit=implicit, dimension=system.n - 1, gammas=gammas, gamma=gamma,
        cres_h=dcres_h(system), cres_h_reduced=None, cres=None, proper=verdict,
        witnesses=tuple(witnesses), inversion=None, method=method,
        char_set=(), char_set_x=(), reduced_system=None)


def _forced_cres(system: DppeSystem) -> ImplicitResult | None:
    gammas, gamma = system.gamma()
    cres_h = dcres_h(system)
    if cres_h.is_zero():
        print("method cres is inconclusive: the complete homogeneous resultant is 0",
              file=_sys.stderr)
        return None
    poly = dcres(system)
    basis = echelon(build_ps(system, COMPLETE))
    chain = characteristic_set(basis)
    return ImplicitResult(
        implicit=canonical_form(poly), dimension=system.n - 1, gammas=gammas,
        gamma=gamma, cres_h=cres_h, cres_h_reduced=None, cres=poly, proper=PROPER,
        witnesses=(), inversion=tuple(inversion_maps(basis)), method="cres",
        char_set=tuple(chain), char_set_x=tuple(char_set_x_part(chain)),
        reduced_system=None)


def _forced_echelon(system: DppeSystem) -> ImplicitResult:
    gammas, gamma = system.gamma()
    basis = echelon(build_ps(system, FULL))
    chain = characteristic_set(basis)
    a0 = char_set_x_part(chain)
    implicit = canonical_form(a0[0]) if len(a0) == 1 else None
    dimension = system.n - 1 if len(a0) == 1 else system.n - len(a0)
    verdict, witnesses = properness(system)
    inv = None
    if verdict == PROPER:
        try:
            inv = tuple(inversion_maps(basis))
        except ValueError:
            inv = None
    return ImplicitResult(
        implicit=implicit, dimension=dimension, gammas=gammas, gamma=gamma,
        cres_h=dcres_h(system), cres_h_reduced=None, cres=None, proper=verdict,
        witnesses=tuple(witnesses), inversion=inv, method="echelon",
        char_set=tuple(chain), char_set_x=tuple(a0), reduced_system=None)


def _print_report(system: DppeSystem, res: ImplicitResult, latex: bool) -> None:
    render = latex_poly if latex else str
    print(f"system: n = {system.n}, orders = {tuple(system.orders)}, N = {system.N}")
    gs = ", ".join(f"gamma_{j + 1} = {g}" for j, g in enumerate(res.gammas))
    print(f"completeness: {gs}, gamma = {res.gamma}")
    if res.gamma > 0:
        print("dRes = 0 (the system is not complete)")
    print(f"dCRes^h = {_render_rf(res.cres_h, latex)}")
    if res.cres_h_reduced is not None:
        print(f"dCRes^h (reduced system) = {_render_rf(res.cres_h_reduced, latex)}")
    if res.cres is not None:
        print(f"dCRes = {render(res.cres)}")
    print(f"method: {res.method}")
    print(f"dimension: {res.dimension}")
    if res.implicit is not None:
        print(f"implicit equation: {render(res.implicit)} = 0")
    else:
        print("no implicit equation: dimension is below n-1")
        for p in res.char_set_x:
            print(f"  characteristic set element: {render(p)}")
    print(f"properness: {res.proper}")
    for w in res.witnesses:
        print(f"  witness: {w}")
    if res.inversion is not None:
        for j, u in enumerate(res.inversion, 1):
            print(f"inversion: u{j} = {render(u)}")


def _render_rf(v: RatFunc, latex: bool) -> str:
    return latex_ratfunc(v) if latex else str(v)


def _print_matrices(system: DppeSystem, res: ImplicitResult) -> None:
    for label, sysi in (("system", system), ("reduced system", res.reduced_system)):
        if sysi is None:
            continue
        variant = FULL if res.method == "echelon" else COMPLETE
        variant_h = COMPLETE_H
        m = build_matrix(build_ps(sysi, variant))
        print(f"{label}: matrix M({m.nrows}) [{variant}]")
        _print_matrix(m)
        mh = build_matrix(build_ps(sysi, variant_h))
        print(f"{label}: matrix M({mh.nrows}) [{variant_h}]")
        _print_matrix(mh)


def _print_matrix(m: CoeffMatrix) -> None:
    headers = [str(c) if c is not None else "1" for c in m.cols]
    table = [headers]
    for r in range(m.nrows):
        row = [str(v) for v in m.data[r]]
        if m.tail is not None:
            row.append(str(m.tail[r]))
        table.append(row)
    widths = [max(len(row[c]) for row in table) for c in range(len(headers))]
    for row in table:
        print("  " + "  ".join(v.rjust(w) for v, w in zip(row, widths)))


def _to_json(system: DppeSystem, res: ImplicitResult) -> dict:
    return {
        "n": system.n,
        "orders": list(system.orders),
        "N": system.N,
        "gamma": {"per_parameter": list(res.gammas), "total": res.gamma},
        "method": res.method,
        "resultants": {
            "cres_h": str(res.cres_h),
            "cres_h_reduced": None if res.cres_h_reduced is None else str(res.cres_h_reduced),
            "cres": None if res.cres is None else _poly_json(res.cres),
        },
        "implicit": None if res.implicit is None else _poly_json(res.implicit),
        "dimension": res.dimension,
        "proper": res.proper,
        "witnesses": list(res.witnesses),
        "inversion": None if res.inversion is None else [_poly_json(p) for p in res.inversion],
        "char_set": [_poly_json(p) for p in res.char_set],
        "char_set_x": [_poly_json(p) for p in res.char_set_x],
    }


def _poly_json(p: LinDiffPoly) -> dict:
    terms = [[f"{d.kind}{d.index}", d.order, str(c)] for d, c in p.sorted_terms(RANK_RSTAR)]
    return {"terms": terms, "constant": str(p.constant)}


def poly_from_json(obj: dict) -> LinDiffPoly:
    """Rebuild a polynomial from the --json serialization."""
    from .diffpoly import Derivative
    from .parsing import parse_coefficient
    terms = {}
    for var, order, coeff in obj["terms"]:
        terms[Derivative(var[0], int(var[1:]), order)] = parse_coefficient(coeff)
    return LinDiffPoly(terms, parse_coefficient(obj["constant"]))


def latex_ratfunc(v: RatFunc) -> str:
    if v.den.degree <= 0:
        return _latex_powers(str(v.num))
    return rf"\frac{{{_latex_powers(str(v.num))}}}{{{_latex_powers(str(v.den))}}}"


def _latex_powers(s: str) -> str:
    out = []
    i = 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and (s[j].isdigit()):
                j += 1
            out.append("^{" + s[i + 1:j] + "}")
            i = j
        elif s[i] == "*":
            out.append(" ")
            i += 1
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def latex_poly(p: LinDiffPoly) -> str:
    parts = []
    for d, c in p.sorted_terms(RANK_RSTAR):
        var = f"{d.kind}_{{{d.index}{d.order}}}" if d.order else f"{d.kind}_{d.index}"
        cs = latex_ratfunc(c)
        if cs == "1":
            term = var
        elif cs == "-1":
            term = "-" + var
        elif c.is_rational() or _plain_monomial(c):
            term = f"{cs}{var}"
        else:
            term = f"({cs}){var}"
        parts.append(term)
    if not p.constant.is_zero() or not parts:
        parts.append(latex_ratfunc(p.constant))
    out = parts[0]
    for q in parts[1:]:
        out += q if q.startswith("-") else "+" + q
    return out


def _plain_monomial(c: RatFunc) -> bool:
    return c.is_polynomial() and sum(1 for a in c.num.coeffs if a != 0) == 1


if __name__ == "__main__":
    raise SystemExit(main())
