"""Elimination pipeline: echelon bases, characteristic sets, implicitization.

For linear systems the reduced Groebner basis of the prolongation ideal with
respect to the ranking that eliminates parameters is just the reduced row
echelon form of the extended coefficient matrix (parameter columns first,
then x-derivative columns, then the constant).  A characteristic set follows
by differential reduction, and the implicit equation, properness verdict and
inversion maps are read off from it.  The resultant route is tried first and
the echelon route is the always-terminating fallback.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diffpoly import (DppeSystem, LinDiffPoly, RANK_RSTAR, U, X, canonical_form,
                       lin, prem_linear, ud)
from .linalg import rref_ratfunc
from .oreops import OreOp, gcrd
from .ratfunc import RatFunc, UniPoly
from .resultant import (COMPLETE, COMPLETE_H, FULL, CoeffMatrix, PsSet, build_matrix,
                        build_ps, dcres, dcres_h, det_bordered)

PROPER = "proper"
IMPROPER = "improper"
UNDETERMINED = "undetermined"


class EchelonBasis:
    """Reduced echelon basis of a prolongation set, rows ascending by lead.

    Every row is monic in its lead; det_scale is the signed product of the
    pivots divided out during the reduction, so maximal minors of the original
    matrix equal det_scale times the corresponding minors of the basis.
    """

    __slots__ = ("rows", "source", "system", "u_cols", "det_scale")

    def __init__(self, rows, source, system, u_cols, det_scale):
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "u_cols", tuple(u_cols))
        object.__setattr__(self, "det_scale", det_scale)

    def __setattr__(self, *a):
        raise AttributeError("EchelonBasis is immutable")

    def g0(self) -> list[LinDiffPoly]:
        """The basis elements free of parameter derivatives."""
        return [r for r in self.rows if not r.has_u_terms()]

    def __repr__(self):
        return f"EchelonBasis({self.source}, {len(self.rows)} rows)"


def echelon(ps: PsSet) -> EchelonBasis:
    if ps.homogeneous:
        raise ValueError("echelon basis needs the K{X} parts; use a non-homogeneous variant")
    u_cols = [c for c in ps.columns if c is not None]
    x_cols = {d for (_, _, p) in ps.entries for d in p.terms if d.kind == X}
    cols = u_cols + sorted(x_cols, key=RANK_RSTAR.key, reverse=True)
    rows = []
    for (_, _, p) in ps.entries:
        rows.append([p.coeff(c) for c in cols] + [p.constant])
    red, _pivots, det_scale = rref_ratfunc(rows)
    basis_rows = []
    for row in red:
        terms = {c: row[idx] for idx, c in enumerate(cols) if not row[idx].is_zero()}
        p = LinDiffPoly(terms, row[-1])
        if not p.is_zero():
            basis_rows.append(p)
    basis_rows.sort(key=lambda p: RANK_RSTAR.key(p.lead(RANK_RSTAR)))
    return EchelonBasis(basis_rows, ps.variant, ps.system, u_cols, det_scale)


def echelon_matrix(basis: EchelonBasis) -> CoeffMatrix:
    """The basis rows as a square matrix in printed layout (descending leads)."""
    rows_desc = list(reversed(basis.rows))
    data = [[p.coeff(c) for c in basis.u_cols] for p in rows_desc]
    tail = [p.x_part() for p in rows_desc]
    labels = list(range(len(rows_desc), 0, -1))
    return CoeffMatrix(labels, list(basis.u_cols) + [None], data, tail)


def characteristic_set(basis: EchelonBasis) -> list[LinDiffPoly]:
    """Differential characteristic set from an ascending echelon basis.

    Scans upward, appending the differential remainder of each new-lead row
    against the chain built so far; rows that reduce to zero are redundant
    prolongations and are dropped.  Elements are normalized with lead
    coefficient 1; the reductions run against integer-scaled copies to keep
    the coefficient arithmetic cheap.
    """
    rows = basis.rows
    chain = [_monic_lead(rows[0])]
    scaled = [canonical_form(rows[0])]
    prev_lead = rows[0].lead(RANK_RSTAR)
    for b in rows[1:]:
        b_lead = b.lead(RANK_RSTAR)
        if b_lead != prev_lead:
            r = prem_linear(canonical_form(b), scaled)
            if not r.is_zero():
                chain.append(_monic_lead(r))
                scaled.append(canonical_form(r))
        prev_lead = b_lead
    return chain


def _monic_lead(p: LinDiffPoly) -> LinDiffPoly:
    lead = p.lead(RANK_RSTAR)
    init = p.coeff(lead) if lead is not None else p.constant
    return p.scale(init.inverse())


def char_set_x_part(chain: list[LinDiffPoly]) -> list[LinDiffPoly]:
    return [p for p in chain if not p.has_u_terms()]


def _regular_chain(basis: EchelonBasis) -> list[LinDiffPoly]:
    """The characteristic set in the nondegenerate case.

    When every parameter column of the echelon basis is a pivot, the chain is
    the single K{X} row followed by the order-0 parameter rows u_j - U_j(X);
    the higher rows are their prolongations and reduce to zero.
    """
    n = basis.system.n
    chain = list(basis.g0())
    for j in range(1, n):
        target = ud(j, 0)
        chain.extend(p for p in basis.rows if p.lead(RANK_RSTAR) == target)
    return chain


def inversion_maps(basis: EchelonBasis) -> list[LinDiffPoly]:
    """The maps U_j(X) with u_j = U_j(X), read off the order-0 parameter rows."""
    n = basis.system.n
    maps = []
    for j in range(1, n):
        target = ud(j, 0)
        row = None
        for p in basis.rows:
            if p.lead(RANK_RSTAR) == target:
                row = p
                break
        if row is None or sum(1 for d in row.terms if d.kind == U) != 1:
            raise ValueError("no inversion maps: system is improper or degenerate")
        maps.append(lin({target: 1}) - row)
    return maps


def column_gcrds(sys: DppeSystem) -> list[OreOp]:
    return [gcrd([sys.ops[i][j] for i in range(sys.n)]) for j in range(sys.n - 1)]


def reduce_system(sys: DppeSystem) -> DppeSystem:
    """Divide each operator column by its gcrd; the implicit ideal is unchanged."""
    gs = column_gcrds(sys)
    ops = [[sys.ops[i][j].right_div_exact(gs[j]) for j in range(sys.n - 1)]
           for i in range(sys.n)]
    return DppeSystem(sys.a, ops)


def properness(sys: DppeSystem) -> tuple[str, list[str]]:
    """Properness verdict with witnesses.

    A nonzero complete homogeneous resultant certifies properness.  A
    nontrivial common right factor in some operator column certifies the
    opposite.  Otherwise the characteristic set decides: the system is proper
    exactly when every parameter u_j occurs as the lead, at order 0, of a
    chain element.
    """
    if not dcres_h(sys).is_zero():
        return PROPER, []
    bad = [(j, g) for j, g in enumerate(column_gcrds(sys), 1) if g.deg > 0]
    if bad:
        return IMPROPER, [f"u{j}: operator column has common right factor {g}" for j, g in bad]
    chain = characteristic_set(echelon(build_ps(sys, FULL)))
    return _lead_criterion(sys, chain)


def _lead_criterion(sys: DppeSystem, chain: list[LinDiffPoly]) -> tuple[str, list[str]]:
    witnesses = []
    for j in range(1, sys.n):
        orders = sorted(d.order for d in (p.lead(RANK_RSTAR) for p in chain)
                        if d is not None and d.kind == U and d.index == j)
        if not orders:
            witnesses.append(f"u{j}: never a lead of the characteristic set")
        elif orders[0] > 0:
            witnesses.append(f"u{j}: lowest lead order {orders[0]} > 0, no inversion")
    if witnesses:
        return IMPROPER, witnesses
    return PROPER, []


@dataclass(frozen=True)
class ImplicitResult:
    """Outcome of the implicitization pipeline for one system."""

    implicit: LinDiffPoly | None
    dimension: int
    gammas: tuple[int, ...]
    gamma: int
    cres_h: RatFunc
    cres_h_reduced: RatFunc | None
    cres: LinDiffPoly | None
    proper: str
    witnesses: tuple[str, ...]
    inversion: tuple[LinDiffPoly, ...] | None
    method: str
    char_set: tuple[LinDiffPoly, ...]
    char_set_x: tuple[LinDiffPoly, ...]
    reduced_system: DppeSystem | None


def implicitize(sys: DppeSystem) -> ImplicitResult:
    """Implicit equation of the system, cheapest sufficient method first.

    1. If the complete homogeneous resultant is nonzero, the complete
       resultant is the implicit equation and the system is proper.
    2. Otherwise remove common right factors from the operator columns and
       retry; success there means the original system was improper.
    3. Otherwise fall back to the echelon basis of the full prolongation set
       and its characteristic set.
    """
    gammas, gamma = sys.gamma()
    cres_h = dcres_h(sys)
    if not cres_h.is_zero():
        poly = dcres(sys)
        basis = echelon(build_ps(sys, COMPLETE))
        chain = _regular_chain(basis)
        return ImplicitResult(
            implicit=canonical_form(poly), dimension=sys.n - 1, gammas=gammas,
            gamma=gamma, cres_h=cres_h, cres_h_reduced=None, cres=poly,
            proper=PROPER, witnesses=(), inversion=tuple(inversion_maps(basis)),
            method="cres", char_set=tuple(chain),
            char_set_x=tuple(char_set_x_part(chain)), reduced_system=None)

    nontrivial = [(j, g) for j, g in enumerate(column_gcrds(sys), 1) if g.deg > 0]
    witnesses = tuple(f"u{j}: operator column has common right factor {g}"
                      for j, g in nontrivial)
    red = reduce_system(sys) if nontrivial else sys
    cres_h_red = None
    if nontrivial:
        cres_h_red = dcres_h(red)
        if not cres_h_red.is_zero():
            poly = dcres(red)
            basis = echelon(build_ps(red, COMPLETE))
            chain = _regular_chain(basis)
            return ImplicitResult(
                implicit=canonical_form(poly), dimension=sys.n - 1, gammas=gammas,
                gamma=gamma, cres_h=cres_h, cres_h_reduced=cres_h_red, cres=poly,
                proper=IMPROPER, witnesses=witnesses, inversion=None,
                method="cres-reduced", char_set=tuple(chain),
                char_set_x=tuple(char_set_x_part(chain)), reduced_system=red)

    basis = echelon(build_ps(red, FULL))
    chain = characteristic_set(basis)
    a0 = char_set_x_part(chain)
    if len(a0) == 1:
        implicit = canonical_form(a0[0])
        dimension = sys.n - 1
    else:
        implicit = None
        dimension = sys.n - len(a0)
    if nontrivial:
        verdict = IMPROPER
    else:
        verdict, crit_witnesses = _lead_criterion(sys, chain)
        witnesses = tuple(crit_witnesses)
    inv = tuple(inversion_maps(basis)) if verdict == PROPER else None
    return ImplicitResult(
        implicit=implicit, dimension=dimension, gammas=gammas, gamma=gamma,
        cres_h=cres_h, cres_h_reduced=cres_h_red, cres=None, proper=verdict,
        witnesses=witnesses, inversion=inv, method="echelon",
        char_set=tuple(chain), char_set_x=tuple(a0),
        reduced_system=red if nontrivial else None)


def evaluate_on_parametrization(sys: DppeSystem, p: LinDiffPoly,
                                u_values: list[RatFunc]) -> RatFunc:
    """Value of p after substituting u_j := u_values[j] and x_i := P_i(u)."""
    cache: dict = {}
    uvals = [v if isinstance(v, RatFunc) else RatFunc(v) for v in u_values]
    for j, v in enumerate(uvals, 1):
        cache[(U, j)] = [v]
    xvals = [sys.parametric_value(i, uvals, cache) for i in range(sys.n)]
    for i, v in enumerate(xvals, 1):
        cache[(X, i)] = [v]
    total = p.constant
    for d, c in p.terms.items():
        derivs = cache[(d.kind, d.index)]
        while len(derivs) <= d.order:
            derivs.append(derivs[-1].derive())
        total = total + c * derivs[d.order]
    return total


def vanishing_oracle(sys: DppeSystem, candidate: LinDiffPoly, trials: int,
                     rng: random.Random | None = None) -> bool:
    """Membership test for the implicit ideal by random exact substitution.

    Each trial draws u_j(t) in Q[t] of degree at most 6 with coefficients in
    {-9..9}, computes the parametrization values x_i(t) exactly and checks
    that the candidate collapses to the zero rational function.
    """
    if trials < 1:
        raise ValueError("oracle needs at least one trial")
    rng = rng or random.Random(1959)
    for _ in range(trials):
        uvals = [RatFunc(UniPoly([rng.randint(-9, 9) for _ in range(7)]))
                 for _ in range(sys.n - 1)]
        if not evaluate_on_parametrization(sys, candidate, uvals).is_zero():
            return False
    return True
