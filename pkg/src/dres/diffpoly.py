"""Linear differential polynomials in the indeterminates x_1..x_n, u_1..u_{n-1}.

A LinDiffPoly is a finite K-linear combination of derivatives plus a constant
in K = Q(t).  Rankings order the derivatives: the orderly ranking on the u's,
the by-variable ranking on the x's (x_1 highest), and the two elimination
rankings between the families.  DppeSystem holds a parametric system
x_i = a_i - sum_j ops[i][j](u_j) together with its order data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .ratfunc import ONE_P, RatFunc, UniPoly, poly_lcm

X = "x"
U = "u"


class Derivative:
    """The order-th derivative of x_index or u_index."""

    __slots__ = ("kind", "index", "order")

    def __init__(self, kind: str, index: int, order: int):
        if kind not in (X, U):
            raise ValueError(f"unknown indeterminate family {kind!r}")
        if index < 1 or order < 0:
            raise ValueError(f"bad derivative {kind}{index},{order}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("Derivative is immutable")

    def d(self, times: int = 1) -> "Derivative":
        return Derivative(self.kind, self.index, self.order + times)

    def __eq__(self, other):
        return (isinstance(other, Derivative)
                and self.kind == other.kind
                and self.index == other.index
                and self.order == other.order)

    def __hash__(self):
        return hash((self.kind, self.index, self.order))

    def __str__(self):
        if self.order == 0:
            return f"{self.kind}{self.index}"
        return f"d({self.kind}{self.index},{self.order})"

    def __repr__(self):
        return f"Derivative({self.kind!r},{self.index},{self.order})"


def xd(i: int, k: int = 0) -> Derivative:
    return Derivative(X, i, k)


def ud(j: int, k: int = 0) -> Derivative:
    return Derivative(U, j, k)


class RankingSpec:
    """Total order on derivatives (and the constant monomial 1, which is least).

    kind 'orderly-u'  : u-derivatives only, order first then index.
    kind 'elim-x'     : the ranking R, every x-derivative above every u-derivative.
    kind 'elim-u'     : the ranking R*, every u-derivative above every x-derivative.
    Within the x family the variable dominates (x_1 highest), then the order;
    within the u family the order dominates, then the index (u_{n-1} highest).
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("orderly-u", "elim-x", "elim-u"):
            raise ValueError(f"unknown ranking {kind!r}")
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, *a):
        raise AttributeError("RankingSpec is immutable")

    def key(self, d):
        """Sort key; bigger key = higher rank.  `d` is a Derivative or None (the 1)."""
        if d is None:
            return (0, 0, 0, 0)
        if d.kind == U:
            fam_elim, fam_r = 2, 1
            inner = (d.order, d.index)
        else:
            fam_elim, fam_r = 1, 2
            inner = (-d.index, d.order)
        if self.kind == "orderly-u":
            if d.kind != U:
                raise ValueError("orderly-u ranking compares u-derivatives only")
            return (1, 0) + inner
        if self.kind == "elim-u":
            return (fam_elim,) + inner + (0,)
        return (fam_r,) + inner + (0,)

    def compare(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return f"RankingSpec({self.kind!r})"


ORDERLY_U = RankingSpec("orderly-u")
RANK_R = RankingSpec("elim-x")
RANK_RSTAR = RankingSpec("elim-u")


class LinDiffPoly:
    """Degree <= 1 differential polynomial: sum of coeff * derivative + constant."""

    __slots__ = ("terms", "constant")

    def __init__(self, terms: Mapping[Derivative, RatFunc] | None = None,
                 constant: RatFunc = RatFunc(0)):
        clean = {}
        if terms:
            for d, c in terms.items():
                c = RatFunc(c) if not isinstance(c, RatFunc) else c
                if not c.is_zero():
                    clean[d] = c
        if not isinstance(constant, RatFunc):
            constant = RatFunc(constant)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "constant", constant)

    def __setattr__(self, *a):
        raise AttributeError("LinDiffPoly is immutable")

    def is_zero(self) -> bool:
        return not self.terms and self.constant.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def coeff(self, d: Derivative) -> RatFunc:
        return self.terms.get(d, RatFunc(0))

    def __eq__(self, other):
        if not isinstance(other, LinDiffPoly):
            return NotImplemented
        return self.terms == other.terms and self.constant == other.constant

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.constant))

    def __add__(self, other: "LinDiffPoly") -> "LinDiffPoly":
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, RatFunc(0)) + c
        return LinDiffPoly(terms, self.constant + other.constant)

    def __neg__(self):
        return LinDiffPoly({d: -c for d, c in self.terms.items()}, -self.constant)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LinDiffPoly":
        c = RatFunc(c) if not isinstance(c, RatFunc) else c
        if c.is_zero():
            return LinDiffPoly()
        return LinDiffPoly({d: v * c for d, v in self.terms.items()}, self.constant * c)

    def derivative(self) -> "LinDiffPoly":
        """Formal derivative: c*y_k -> c'*y_k + c*y_{k+1}, constant -> constant'."""
        terms: dict[Derivative, RatFunc] = {}
        for d, c in self.terms.items():
            dc = c.derive()
            if not dc.is_zero():
                terms[d] = terms.get(d, RatFunc(0)) + dc
            up = d.d()
            terms[up] = terms.get(up, RatFunc(0)) + c
        return LinDiffPoly(terms, self.constant.derive())

    def differentiate(self, times: int) -> "LinDiffPoly":
        if times < 0:
            raise ValueError("negative differentiation count")
        p = self
        for _ in range(times):
            p = p.derivative()
        return p

    def ord(self, kind: str, index: int) -> int:
        """Highest order of the given indeterminate, or -1 when absent."""
        orders = [d.order for d in self.terms if d.kind == kind and d.index == index]
        return max(orders) if orders else -1

    def lead(self, ranking: RankingSpec = RANK_RSTAR) -> Derivative | None:
        """Highest derivative present; None for a constant polynomial."""
        if not self.terms:
            return None
        return max(self.terms, key=ranking.key)

    def has_u_terms(self) -> bool:
        return any(d.kind == U for d in self.terms)

    def x_part(self) -> "LinDiffPoly":
        """The K{X}-part: x-terms plus the constant."""
        return LinDiffPoly({d: c for d, c in self.terms.items() if d.kind == X},
                           self.constant)

    def sorted_terms(self, ranking: RankingSpec = RANK_RSTAR):
        return sorted(self.terms.items(), key=lambda dc: ranking.key(dc[0]), reverse=True)

    def __str__(self):
        parts = []
        for d, c in self.sorted_terms():
            cs = str(c)
            if cs == "1":
                term = str(d)
            elif cs == "-1":
                term = f"-{d}"
            elif c.is_rational() or (c.is_polynomial() and _single(c)):
                term = f"{cs}*{d}"
            else:
                term = f"({cs})*{d}"
            parts.append(term)
        if not self.constant.is_zero() or not parts:
            parts.append(str(self.constant))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"LinDiffPoly({self})"


def _single(c: RatFunc) -> bool:
    return sum(1 for a in c.num.coeffs if a != 0) == 1


def lin(terms=None, constant=0) -> LinDiffPoly:
    return LinDiffPoly(terms, RatFunc(constant) if not isinstance(constant, RatFunc) else constant)


def prem_linear(p: LinDiffPoly, chain: Iterable[LinDiffPoly]) -> LinDiffPoly:
    """Differential reduction of p with respect to a chain of linear polynomials.

    Chain elements must have leads (w.r.t. R*) with coefficients in K, so the
    reduction is exact elimination with no pseudo-multiplication.  Repeatedly
    the highest derivative of any chain lead still present in p is removed by
    subtracting the matching multiple of the (differentiated) chain element;
    the result contains no derivative of any lead.
    """
    chain = [a for a in chain if not a.is_zero()]
    if not chain:
        return p
    leads = []
    for idx, a in enumerate(chain):
        la = a.lead(RANK_RSTAR)
        if la is None:
            raise ValueError("chain element without a lead derivative")
        leads.append((idx, a, la))
    shifted_cache: dict[tuple[int, int], LinDiffPoly] = {}
    while True:
        best = None
        for idx, a, la in leads:
            for d in p.terms:
                if d.kind == la.kind and d.index == la.index and d.order >= la.order:
                    if best is None or RANK_RSTAR.compare(d, best[0]) > 0:
                        best = (d, idx, a, la)
        if best is None:
            return p
        d, idx, a, la = best
        key = (idx, d.order - la.order)
        shifted = shifted_cache.get(key)
        if shifted is None:
            shifted = a.differentiate(d.order - la.order)
            shifted_cache[key] = shifted
        p = p - shifted.scale(p.coeff(d) / shifted.coeff(d))


class DppeSystem:
    """n parametric equations x_i = a_i - sum_j ops[i][j](u_j).

    ops is an n x (n-1) array of differential operators; every row and every
    column must contain a nonzero operator (a fully constant equation has no
    order, and an unused parameter would make the parameter count wrong).
    """

    __slots__ = ("n", "a", "ops", "orders", "N")

    def __init__(self, a, ops):
        a = tuple(RatFunc(v) if not isinstance(v, RatFunc) else v for v in a)
        ops = tuple(tuple(row) for row in ops)
        n = len(a)
        if n < 2:
            raise ValueError("a system needs at least 2 equations")
        if len(ops) != n or any(len(row) != n - 1 for row in ops):
            raise ValueError(f"operator array must be {n} x {n - 1}")
        orders = []
        for i, row in enumerate(ops):
            o = max(op.deg for op in row)
            if o < 0:
                raise ValueError(f"equation {i + 1} is constant: all its operators are zero")
            orders.append(o)
        for j in range(n - 1):
            if all(ops[i][j].is_zero() for i in range(n)):
                raise ValueError(f"parameter u{j + 1} does not occur in any equation")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "ops", ops)
        object.__setattr__(self, "orders", tuple(orders))
        object.__setattr__(self, "N", sum(orders))

    def __setattr__(self, *a):
        raise AttributeError("DppeSystem is immutable")

    def __eq__(self, other):
        if not isinstance(other, DppeSystem):
            return NotImplemented
        return self.a == other.a and self.ops == other.ops

    def __hash__(self):
        return hash((self.a, self.ops))

    def h_poly(self, i: int) -> LinDiffPoly:
        """H_i = sum_j ops[i][j](u_j)."""
        h = LinDiffPoly()
        for j in range(self.n - 1):
            h = h + self.ops[i][j].apply(U, j + 1)
        return h

    def t_poly(self, i: int) -> LinDiffPoly:
        """T_i = x_i - a_i."""
        return LinDiffPoly({xd(i + 1): RatFunc(1)}, -self.a[i])

    def f_poly(self, i: int) -> LinDiffPoly:
        """F_i = T_i + H_i = x_i - P_i(U)."""
        return self.t_poly(i) + self.h_poly(i)

    def decompose(self):
        """All three families (F, H, T), index-aligned."""
        F, H, Tl = [], [], []
        for i in range(self.n):
            h = self.h_poly(i)
            t = self.t_poly(i)
            F.append(t + h)
            H.append(h)
            Tl.append(t)
        return F, H, Tl

    def gamma(self) -> tuple[tuple[int, ...], int]:
        """Per-parameter completeness defects and their total.

        gamma_j = min_i (o_i - ord(F_i, u_j)), taken over all i with the
        convention ord = -1 for an absent parameter.
        """
        F = [self.f_poly(i) for i in range(self.n)]
        gammas = []
        for j in range(1, self.n):
            gammas.append(min(self.orders[i] - F[i].ord(U, j) for i in range(self.n)))
        return tuple(gammas), sum(gammas)

    def parametric_value(self, i: int, u_values: list[RatFunc],
                         cache: dict | None = None) -> RatFunc:
        """P_i evaluated at concrete functions u_j(t) in Q(t)."""
        val = self.a[i]
        for j in range(self.n - 1):
            op = self.ops[i][j]
            if op.is_zero():
                continue
            val = val - op.apply_to_value(u_values[j], cache=cache, key=(U, j + 1))
        return val

    def __str__(self):
        return "\n".join(self.equation_str(i) for i in range(self.n))

    def equation_str(self, i: int) -> str:
        rhs = LinDiffPoly({}, self.a[i]) - self.h_poly(i)
        return f"x{i + 1} = {rhs}"

    def __repr__(self):
        return f"DppeSystem(n={self.n}, orders={self.orders})"


def canonical_form(p: LinDiffPoly) -> LinDiffPoly:
    """Canonical representative of p modulo nonzero factors in K.

    Scales so every coefficient lies in Z[t], with trivial common polynomial
    factor and integer content 1, and the coefficient of the highest monomial
    under R* has a positive leading integer.
    """
    if p.is_zero():
        return p
    coeffs = list(p.terms.values())
    if not p.constant.is_zero():
        coeffs.append(p.constant)
    den = poly_lcm(c.den for c in coeffs)
    nums = [c.num * (den // c.den) for c in coeffs]
    g = nums[0]
    for q in nums[1:]:
        g = g.gcd(q)
        if g.degree == 0:
            break
    scale = RatFunc(den) / RatFunc(g if g.degree > 0 else ONE_P)
    p = p.scale(scale)
    fracs: list[Fraction] = []
    for c in list(p.terms.values()) + [p.constant]:
        fracs.extend(c.num.coeffs)
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // _gcd_int(denom_lcm, f.denominator)
    numer_gcd = 0
    for f in fracs:
        numer_gcd = _gcd_int(numer_gcd, f.numerator * denom_lcm // f.denominator)
    p = p.scale(Fraction(denom_lcm, numer_gcd))
    top = p.lead(RANK_RSTAR)
    lead_coeff = p.coeff(top) if top is not None else p.constant
    if lead_coeff.num.lead() < 0:
        p = p.scale(-1)
    return p


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
