"""Exact linear algebra kernels.

Determinants are computed fraction-free: each matrix row over Q(t) is cleared
to a Z[t] row (tracking the factor), then one-step Bareiss elimination runs on
dense integer coefficient lists, and the tracked factors are divided out at
the end.  Reduced row echelon over Q(t) is done directly with rational
function arithmetic since the echelon rows themselves are needed.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import ONE_P, RatFunc, UniPoly, poly_lcm

IPoly = list  # dense int coefficients, lowest first, [] is zero


def ip_mul(a: IPoly, b: IPoly) -> IPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return out


def ip_sub(a: IPoly, b: IPoly) -> IPoly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and out[-1] == 0:
        out.pop()
    return out


def ip_div_exact(a: IPoly, b: IPoly) -> IPoly:
    """Quotient a/b when the division is exact in Z[t] (Bareiss guarantees it)."""
    if not a:
        return []
    if b == [1]:
        return list(a)
    if not b:
        raise ZeroDivisionError("exact division by zero polynomial")
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        if len(r) - 1 < k:
            continue
        c = r[k]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError("inexact division in fraction-free elimination")
        qc = c // lb
        q[k - db] = qc
        for i, bi in enumerate(b):
            r[k - db + i] -= qc * bi
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ArithmeticError("inexact division in fraction-free elimination")
    return q


def clear_rows(rows: list[list[RatFunc]]) -> tuple[list[list[IPoly]], RatFunc]:
    """Scale each row into Z[t]; returns integer rows and the product of scales."""
    out = []
    scale = RatFunc(1)
    for row in rows:
        dens = [e.den for e in row if not e.is_zero()]
        lcm_d = poly_lcm(dens) if dens else ONE_P
        polys = [e.num * (lcm_d // e.den) if not e.is_zero() else None for e in row]
        denom = 1
        for p in polys:
            if p is not None:
                for c in p.coeffs:
                    denom = denom * c.denominator // _gcd(denom, c.denominator)
        irow = []
        for p in polys:
            if p is None:
                irow.append([])
            else:
                irow.append([int(c * denom) for c in p.coeffs])
        out.append(irow)
        scale = scale * RatFunc(lcm_d) * RatFunc(Fraction(denom))
    return out, scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ip_to_ratfunc(p: IPoly) -> RatFunc:
    return RatFunc(UniPoly(p))


def bareiss_forward(rows: list[list[IPoly]], npivot: int) -> tuple[int, bool]:
    """In-place fraction-free forward elimination on the first npivot columns.

    Returns (sign, full_rank): sign tracks row swaps; full_rank is False as
    soon as some pivot column has no nonzero candidate, in which case every
    maximal minor through the pivot columns vanishes.
    """
    n = len(rows)
    width = len(rows[0]) if rows else 0
    sign = 1
    prev: IPoly = [1]
    for k in range(npivot):
        piv = next((r for r in range(k, n) if rows[r][k]), None)
        if piv is None:
            return sign, False
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            rk = rows[k]
            if rik:
                for j in range(k + 1, width):
                    ri[j] = ip_div_exact(ip_sub(ip_mul(pk, ri[j]), ip_mul(rik, rk[j])), prev)
            else:
                for j in range(k + 1, width):
                    ri[j] = ip_div_exact(ip_mul(pk, ri[j]), prev)
            ri[k] = []
        prev = pk
    return sign, True


def det_ratfunc(rows: list[list[RatFunc]]) -> RatFunc:
    """Exact determinant of a square matrix over Q(t)."""
    n = len(rows)
    if n == 0:
        return RatFunc(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    irows, scale = clear_rows(rows)
    sign, ok = bareiss_forward(irows, n - 1)
    if not ok:
        return RatFunc(0)
    last = irows[n - 1][n - 1]
    det = ip_to_ratfunc(last if sign > 0 else [-c for c in last])
    return det / scale


def bordered_dets(rows: list[list[RatFunc]], npivot: int) -> list[RatFunc]:
    """Determinants det([P | v_c]) for each passenger column v_c.

    rows is (npivot+1) x (npivot + p): the first npivot columns P are shared,
    and each passenger column c forms one square matrix with them.
    """
    n = len(rows)
    if n != npivot + 1:
        raise ValueError("bordered determinant needs exactly npivot+1 rows")
    width = len(rows[0])
    irows, scale = clear_rows(rows)
    sign, ok = bareiss_forward(irows, npivot)
    if not ok:
        return [RatFunc(0)] * (width - npivot)
    out = []
    for j in range(npivot, width):
        v = irows[n - 1][j]
        out.append(ip_to_ratfunc(v if sign > 0 else [-c for c in v]) / scale)
    return out


def rank_ratfunc(rows: list[list[RatFunc]]) -> int:
    """Exact rank, by fraction-free forward elimination with column skipping."""
    if not rows:
        return 0
    irows, _ = clear_rows(rows)
    n = len(irows)
    width = len(irows[0])
    rank = 0
    prev: IPoly = [1]
    for col in range(width):
        piv = next((r for r in range(rank, n) if irows[r][col]), None)
        if piv is None:
            continue
        irows[rank], irows[piv] = irows[piv], irows[rank]
        pk = irows[rank][col]
        rk = irows[rank]
        for i in range(rank + 1, n):
            ri = irows[i]
            rik = ri[col]
            if rik:
                for j in range(col + 1, width):
                    ri[j] = ip_div_exact(ip_sub(ip_mul(pk, ri[j]), ip_mul(rik, rk[j])), prev)
            else:
                for j in range(col + 1, width):
                    ri[j] = ip_div_exact(ip_mul(pk, ri[j]), prev)
            ri[col] = []
        prev = pk
        rank += 1
        if rank == n:
            break
    return rank


def rref_ratfunc(rows: list[list[RatFunc]]) -> tuple[list[list[RatFunc]], list[int], RatFunc]:
    """Reduced row echelon form over Q(t) with monic pivots.

    Runs single-step fraction-free Gauss-Jordan on the cleared Z[t] rows, so
    intermediate entries are minors of the input rather than reduced rational
    functions, and divides the final rows by the last pivot.  Returns
    (reduced rows, pivot column indices, det_scale), where any maximal minor
    of the input equals det_scale times the corresponding minor of the output
    up to sign.
    """
    rows_in = [list(r) for r in rows]
    n = len(rows_in)
    width = len(rows_in[0]) if rows_in else 0
    irows, cleared = clear_rows(rows_in)
    pivots: list[int] = []
    sign = 1
    prev: IPoly = [1]
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, n) if irows[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            irows[rank], irows[piv] = irows[piv], irows[rank]
            sign = -sign
        pk = irows[rank][col]
        rk = irows[rank]
        for i in range(n):
            if i == rank:
                continue
            ri = irows[i]
            rik = ri[col]
            if rik:
                for j in range(width):
                    if j != col:
                        ri[j] = ip_div_exact(ip_sub(ip_mul(pk, ri[j]), ip_mul(rik, rk[j])),
                                             prev)
            else:
                for j in range(width):
                    if j != col:
                        ri[j] = ip_div_exact(ip_mul(pk, ri[j]), prev)
            ri[col] = []
        prev = pk
        pivots.append(col)
        rank += 1
        if rank == n:
            break
    delta = UniPoly(prev)
    out = []
    for r in range(n):
        if r < rank:
            out.append([RatFunc(UniPoly(e), delta) for e in irows[r]])
        else:
            out.append([RatFunc(0)] * width)
    det_scale = RatFunc(delta if sign > 0 else -delta) / cleared
    return out, pivots, det_scale
