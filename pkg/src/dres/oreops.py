"""The noncommutative ring K[d] of linear differential operators over Q(t).

Multiplication uses the twist d*k = k*d + k'.  The ring is right Euclidean,
which gives right division, exact right division and greatest common right
divisors.  ``commutator_correction`` solves for the degree-reduced operators
D1, D2 with (L2 - D2)L1 = (L1 - D1)L2, the correction needed to eliminate a
shared parameter between two equations when the coefficients are not constant.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .diffpoly import Derivative, LinDiffPoly, U
from .ratfunc import RatFunc


class OreOp:
    """Differential operator sum_k coeffs[k] * d^k; deg(0) = -1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("OreOp is immutable")

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_unit(self) -> bool:
        return self.deg == 0

    def __getitem__(self, k: int) -> RatFunc:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFunc(0)

    def lead(self) -> RatFunc:
        return self.coeffs[-1] if self.coeffs else RatFunc(0)

    def __eq__(self, other):
        if not isinstance(other, OreOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "OreOp") -> "OreOp":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OreOp(out)

    def __neg__(self):
        return OreOp([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OreOp":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return OreOp([a * c for a in self.coeffs])

    def monic(self) -> "OreOp":
        if self.is_zero():
            return self
        return self.scale(self.lead().inverse())

    def d_shift(self) -> "OreOp":
        """Left-multiply by d: coefficients become c[k-1] + c[k]'."""
        n = len(self.coeffs)
        out = [RatFunc(0)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            out[k] = out[k] + c.derive()
            out[k + 1] = out[k + 1] + c
        return OreOp(out)

    def __mul__(self, other: "OreOp") -> "OreOp":
        """Operator composition self o other, with the twist applied."""
        if not isinstance(other, OreOp):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return OreOp()
        acc = OreOp()
        cur = other
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + cur.scale_left(c)
            if k < self.deg:
                cur = cur.d_shift()
        return acc

    def scale_left(self, c: RatFunc) -> "OreOp":
        # k * (sum c_j d^j) has coefficients k*c_j: scalars commute into coefficients
        return OreOp([c * a for a in self.coeffs])

    def apply(self, kind: str, index: int) -> LinDiffPoly:
        """The linear differential polynomial sum_k coeffs[k] * y_{index,k}."""
        return LinDiffPoly({Derivative(kind, index, k): c
                            for k, c in enumerate(self.coeffs)})

    def apply_to_const(self, a: RatFunc) -> RatFunc:
        """Apply to an element of K: sum coeffs[k] * a^(k)."""
        out = RatFunc(0)
        cur = a
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * cur
            if k < self.deg:
                cur = cur.derive()
        return out

    def apply_to_value(self, value: RatFunc, cache: dict | None = None, key=None) -> RatFunc:
        """Apply to a concrete function value(t); derivatives cached under key."""
        if cache is None or key is None:
            return self.apply_to_const(value)
        derivs = cache.setdefault(key, [value])
        while len(derivs) <= self.deg:
            derivs.append(derivs[-1].derive())
        out = RatFunc(0)
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * derivs[k]
        return out

    def right_divmod(self, other: "OreOp") -> tuple["OreOp", "OreOp"]:
        """q, r with self = q * other + r and deg(r) < deg(other)."""
        if other.is_zero():
            raise ZeroDivisionError("right division by the zero operator")
        q = OreOp()
        r = self
        while not r.is_zero() and r.deg >= other.deg:
            k = r.deg - other.deg
            c = r.lead() / other.lead()
            mono = OreOp([RatFunc(0)] * k + [c])
            q = q + mono
            r = r - mono * other
        return q, r

    def right_div_exact(self, g: "OreOp") -> "OreOp":
        q, r = self.right_divmod(g)
        if not r.is_zero():
            raise ValueError(f"operator {self} is not right divisible by {g} (remainder {r})")
        return q

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.deg, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                term = str(c) if not _needs_paren(c) else f"({c})"
            else:
                dk = "d" if k == 1 else f"d^{k}"
                cs = str(c)
                if cs == "1":
                    term = dk
                elif cs == "-1":
                    term = f"-{dk}"
                elif _needs_paren(c):
                    term = f"({cs})*{dk}"
                else:
                    term = f"{cs}*{dk}"
            if not parts:
                parts.append(term)
            else:
                parts.append("- " + term[1:] if term.startswith("-") else "+ " + term)
        return " ".join(parts)

    def __repr__(self):
        return f"OreOp({self})"


def _needs_paren(c: RatFunc) -> bool:
    s = str(c)
    return ("+" in s) or ("-" in s[1:]) or ("/" in s)


def op(*coeffs) -> OreOp:
    """Operator from coefficients, constant term first: op(1, 0, 2) = 2d^2 + 1."""
    return OreOp(coeffs)


D = OreOp([0, 1])


def gcrd(ops: Sequence[OreOp]) -> OreOp:
    """Monic greatest common right divisor, folded pairwise left to right."""
    ops = list(ops)
    if not ops or all(o.is_zero() for o in ops):
        raise ValueError("gcrd needs at least one nonzero operator")
    g = OreOp()
    for o in ops:
        g = _gcrd2(g, o)
        if g.deg == 0:
            break
    return g.monic()


def _gcrd2(a: OreOp, b: OreOp) -> OreOp:
    while not b.is_zero():
        _, r = a.right_divmod(b)
        a, b = b, r
    return a


def commutator_correction(l1: OreOp, l2: OreOp) -> tuple[OreOp, OreOp]:
    """Solve (l2 - d2) l1 = (l1 - d1) l2 with deg(d_i) <= deg(l_i) - 1.

    Requires (l1, l2) coprime.  The defining identity is equivalent to
    d1*l2 - d2*l1 = l1*l2 - l2*l1, a square K-linear system in the unknown
    coefficients whose matrix is the homogeneous resultant matrix of the
    pair; coprimality makes it nonsingular.
    """
    if l1.is_zero() or l2.is_zero():
        raise ValueError("commutator correction needs nonzero operators")
    o1, o2 = l1.deg, l2.deg
    m = o1 + o2
    if m == 0:
        return OreOp(), OreOp()
    rhs_op = l1 * l2 - l2 * l1
    # columns: alpha_0..alpha_{o1-1} then beta_0..beta_{o2-1}
    cols: list[OreOp] = []
    cur = l2
    for _ in range(o1):
        cols.append(cur)
        cur = cur.d_shift()
    cur = l1
    for _ in range(o2):
        cols.append(-cur)
        cur = cur.d_shift()
    mat = [[cols[c][k] for c in range(m)] for k in range(m)]
    rhs = [rhs_op[k] for k in range(m)]
    sol = _solve(mat, rhs)
    if sol is None:
        raise ArithmeticError(
            "commutator-correction system is singular; the operators share a right factor")
    d1 = OreOp(sol[:o1])
    d2 = OreOp(sol[o1:])
    return d1, d2


def _solve(mat: list[list[RatFunc]], rhs: list[RatFunc]) -> list[RatFunc] | None:
    """Exact Gaussian elimination for a square system; None when singular."""
    m = len(mat)
    A = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(m):
        piv = next((r for r in range(col, m) if not A[r][col].is_zero()), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col].inverse()
        A[col] = [v * inv for v in A[col]]
        for r in range(m):
            if r != col and not A[r][col].is_zero():
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [A[r][m] for r in range(m)]
