"""Prolongation sets and differential resultant matrices.

Four prolongation variants of a system are supported: the plain set (rows
d^(N-o_i) F_i .. F_i), its homogeneous counterpart (one prolongation less,
H_i instead of F_i, no constant column), and the two complete variants that
truncate every range by the completeness defect gamma.  Rows are grouped by
equation (i ascending, derivative exponent descending) and columns are the
parameter derivatives in decreasing orderly ranking; the non-homogeneous
matrices carry the K{X}-part of each row in a final symbolic column, exactly
as the matrices are conventionally printed.
"""

from __future__ import annotations

from .diffpoly import (LinDiffPoly, DppeSystem, Derivative, ORDERLY_U, U, ud)
from .linalg import bordered_dets, det_ratfunc, rank_ratfunc
from .ratfunc import RatFunc

FULL = "full"
HOMOGENEOUS = "homogeneous"
COMPLETE = "complete"
COMPLETE_H = "complete-homogeneous"

_VARIANTS = (FULL, HOMOGENEOUS, COMPLETE, COMPLETE_H)


class PsSet:
    """Ordered prolongation set of a system, with its column (variable) list.

    entries are triples (i, k, polynomial) for d^k applied to equation i,
    i ascending and k descending within each group.  columns lists the
    parameter derivatives in decreasing orderly ranking; non-homogeneous
    variants append None for the constant (K{X}) column.
    """

    __slots__ = ("variant", "system", "entries", "columns", "gammas", "gamma")

    def __init__(self, variant, system, entries, columns, gammas, gamma):
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "system", system)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(self, "columns", tuple(columns))
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "gamma", gamma)

    def __setattr__(self, *a):
        raise AttributeError("PsSet is immutable")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def homogeneous(self) -> bool:
        return self.variant in (HOMOGENEOUS, COMPLETE_H)

    def __repr__(self):
        return f"PsSet({self.variant}, size={self.size})"


def build_ps(sys: DppeSystem, variant: str = FULL) -> PsSet:
    if variant not in _VARIANTS:
        raise ValueError(f"unknown prolongation variant {variant!r}")
    n, N = sys.n, sys.N
    gammas, gamma = sys.gamma()
    if variant in (FULL, HOMOGENEOUS):
        g_all, g_js = 0, (0,) * (n - 1)
    else:
        g_all, g_js = gamma, gammas
    extra = 1 if variant in (HOMOGENEOUS, COMPLETE_H) else 0
    base = [sys.h_poly(i) if extra else sys.f_poly(i) for i in range(n)]
    entries = []
    for i in range(n):
        top = N - sys.orders[i] - g_all - extra
        p = base[i]
        group = [(i + 1, 0, p)]
        for k in range(1, top + 1):
            p = p.derivative()
            group.append((i + 1, k, p))
        entries.extend(reversed(group[: top + 1] if top >= 0 else []))
    columns = []
    for j in range(1, n):
        top = N - g_js[j - 1] - g_all - extra
        columns.extend(ud(j, k) for k in range(top + 1))
    columns.sort(key=ORDERLY_U.key, reverse=True)
    if not extra:
        columns.append(None)
    return PsSet(variant, sys, entries, columns, gammas, gamma)


class CoeffMatrix:
    """Labeled matrix over Q(t), optionally with a trailing K{X} column.

    data holds the scalar block; tail (when present) holds the symbolic
    K{X}-part of each row, displayed as the last column.
    """

    __slots__ = ("rows", "cols", "data", "tail")

    def __init__(self, rows, cols, data, tail=None):
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "cols", tuple(cols))
        object.__setattr__(self, "data", tuple(tuple(r) for r in data))
        object.__setattr__(self, "tail", tuple(tail) if tail is not None else None)

    def __setattr__(self, *a):
        raise AttributeError("CoeffMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def entry(self, r: int, c: int):
        """Entry in printed coordinates; the tail column is addressable too."""
        if self.tail is not None and c == self.ncols:
            return self.tail[r]
        return self.data[r][c]

    def submatrix(self, drop_rows=(), drop_cols=()) -> "CoeffMatrix":
        """Remove the given 1-based printed rows and columns."""
        dr = set(drop_rows)
        dc = set(drop_cols)
        total_cols = self.ncols + (1 if self.tail is not None else 0)
        keep_r = [r for r in range(self.nrows) if r + 1 not in dr]
        keep_c = [c for c in range(total_cols) if c + 1 not in dc]
        keep_tail = self.tail is not None and total_cols in (c + 1 for c in keep_c)
        scalar_cols = [c for c in keep_c if c < self.ncols]
        data = [[self.data[r][c] for c in scalar_cols] for r in keep_r]
        tail = [self.tail[r] for r in keep_r] if keep_tail else None
        rows = [self.rows[r] for r in keep_r]
        cols = [self.cols[c] for c in keep_c]
        return CoeffMatrix(rows, cols, data, tail)

    def __repr__(self):
        shape = f"{self.nrows}x{self.ncols + (1 if self.tail is not None else 0)}"
        return f"CoeffMatrix({shape})"


def build_matrix(ps: PsSet) -> CoeffMatrix:
    u_cols = [c for c in ps.columns if c is not None]
    data = []
    tail = None if ps.homogeneous else []
    rows = []
    for (i, k, p) in ps.entries:
        rows.append((i, k))
        data.append([p.coeff(c) for c in u_cols])
        if tail is not None:
            tail.append(p.x_part())
    return CoeffMatrix(rows, list(ps.columns), data, tail)


def det_exact(m: CoeffMatrix) -> RatFunc:
    """Exact determinant of a scalar square matrix (no symbolic column)."""
    if m.tail is not None:
        raise ValueError("matrix carries a symbolic K{X} column; use det_bordered")
    if m.nrows != m.ncols:
        raise ValueError(f"non-square matrix {m.nrows}x{m.ncols}")
    return det_ratfunc([list(r) for r in m.data])


def det_bordered(m: CoeffMatrix) -> LinDiffPoly:
    """Determinant of a matrix whose last column is the symbolic K{X} part.

    By linearity in the last column this is sum_v det([U | coeff-column of v])
    over the x-derivatives v present (plus the constant column), assembled as
    a linear differential polynomial.
    """
    if m.tail is None:
        raise ValueError("matrix has no symbolic column")
    L = m.nrows
    if L != m.ncols + 1:
        raise ValueError(f"bordered matrix must be L x (L-1) plus tail, got {L}x{m.ncols}")
    x_cols: list[Derivative] = []
    seen = set()
    for p in m.tail:
        for d in p.terms:
            if d not in seen:
                seen.add(d)
                x_cols.append(d)
    ext_rows = []
    for r in range(L):
        p = m.tail[r]
        ext_rows.append(list(m.data[r]) + [p.coeff(d) for d in x_cols] + [p.constant])
    dets = bordered_dets(ext_rows, L - 1)
    terms = {d: dets[idx] for idx, d in enumerate(x_cols)}
    return LinDiffPoly(terms, dets[-1])


def u_block_rank(m: CoeffMatrix) -> int:
    """Rank of the parameter-coefficient block (the principal L x (L-1) part)."""
    return rank_ratfunc([list(r) for r in m.data])


def dres(sys: DppeSystem) -> LinDiffPoly:
    return det_bordered(build_matrix(build_ps(sys, FULL)))


def dres_h(sys: DppeSystem) -> RatFunc:
    return _h_resultant(sys, HOMOGENEOUS, FULL)


def dcres(sys: DppeSystem) -> LinDiffPoly:
    return det_bordered(build_matrix(build_ps(sys, COMPLETE)))


def dcres_h(sys: DppeSystem) -> RatFunc:
    return _h_resultant(sys, COMPLETE_H, COMPLETE)


def _h_resultant(sys: DppeSystem, variant: str, base_variant: str) -> RatFunc:
    ps = build_ps(sys, variant)
    if ps.size == 0:
        # all operators have degree 0, so there is nothing to prolong and the
        # determinant formulation degenerates; the rank criterion it certifies
        # is still meaningful, so answer with that
        m = build_matrix(build_ps(sys, base_variant))
        return RatFunc(1 if rank_ratfunc([list(r) for r in m.data]) == m.nrows - 1 else 0)
    return det_exact(build_matrix(ps))


def s_matrix(sys: DppeSystem, complete: bool = False) -> CoeffMatrix:
    """The n x (n-1) matrix of coefficients of u_{j, o_i - gamma_j} in F_i."""
    gammas = sys.gamma()[0] if complete else (0,) * (sys.n - 1)
    rows = []
    data = []
    for i in range(sys.n):
        f = sys.f_poly(i)
        rows.append(i + 1)
        data.append([f.coeff(ud(j, sys.orders[i] - gammas[j - 1]))
                     if sys.orders[i] - gammas[j - 1] >= 0 else RatFunc(0)
                     for j in range(1, sys.n)])
    return CoeffMatrix(rows, list(range(1, sys.n)), data)


def s_minor(s: CoeffMatrix, i: int) -> CoeffMatrix:
    """Delete row i (1-based) of S, giving the square minor S_i."""
    return s.submatrix(drop_rows=(i,))
