"""Exact arithmetic in Q[t] and the differential field Q(t).

Rational numbers are ``fractions.Fraction`` (arbitrary precision).  UniPoly is
a dense univariate polynomial in t over Q; RatFunc is a reduced fraction of
two UniPoly with a monic denominator.  Both are immutable and hashable, so
equality is a structural check.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class UniPoly:
    """Polynomial in t with Fraction coefficients, lowest degree first.

    Canonical form: no trailing zero coefficients; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return ZERO_P
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(out)

    def scale(self, c: Scalar) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return ZERO_P
        return UniPoly([a * c for a in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t**k."""
        if not self.coeffs:
            return ZERO_P
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        d, lc = other.degree, other.lead()
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / lc
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return UniPoly(q), UniPoly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd by the Euclidean algorithm.

        Degrees in this engine stay small, so the plain monic remainder
        sequence is adequate; this is the one replaceable kernel if inputs
        ever grow.
        """
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return ZERO_P
        return ((self * other) // self.gcd(other)).monic()

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, t0: Scalar) -> Fraction:
        t0 = Fraction(t0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                tk = "t" if k == 1 else f"t^{k}"
                term = tk if abs(c) == 1 else f"{abs(c)}*{tk}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"


ZERO_P = UniPoly()
ONE_P = UniPoly([1])
T_P = UniPoly([0, 1])


def poly_lcm(polys: Iterable[UniPoly]) -> UniPoly:
    out = ONE_P
    for p in polys:
        out = out.lcm(p)
    return out


class RatFunc:
    """Element of Q(t) as num/den with den monic and gcd(num, den) = 1.

    Zero is 0/1; the canonical form makes == and hash structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc) and den is None:
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        if isinstance(num, (int, Fraction)):
            num = UniPoly([num])
        if den is None:
            den = ONE_P
        elif isinstance(den, (int, Fraction)):
            den = UniPoly([den])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(t)")
        if num.is_zero():
            num, den = ZERO_P, ONE_P
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead()
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE_P

    def is_rational(self) -> bool:
        """True when the value lies in Q (degree-0 numerator, denominator 1)."""
        return self.den == ONE_P and self.num.degree <= 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return RatFunc(self.den, self.num)

    def derive(self) -> "RatFunc":
        """Derivation d/dt, by the quotient rule."""
        n, d = self.num, self.den
        if d == ONE_P:
            return RatFunc(n.derivative())
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def eval_at(self, t0: Scalar) -> Fraction:
        t0 = Fraction(t0)
        dv = self.den.eval(t0)
        if dv == 0:
            raise ZeroDivisionError(f"pole at t = {t0}: denominator {self.den} vanishes")
        return self.num.eval(t0) / dv

    def __str__(self):
        if self.den == ONE_P:
            return _wrap_num(self.num)
        return f"{_paren(self.num)}/{_paren(self.den)}"

    def __repr__(self):
        return f"RatFunc({self})"


def _coerce(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return RatFunc(v)
    if isinstance(v, UniPoly):
        return RatFunc(v)
    return NotImplemented


def _is_single_term(p: UniPoly) -> bool:
    return sum(1 for c in p.coeffs if c != 0) == 1


def _paren(p: UniPoly) -> str:
    s = str(p)
    if _is_single_term(p) and not s.startswith("-") and "/" not in s:
        return s
    return f"({s})"


def _wrap_num(p: UniPoly) -> str:
    return str(p)


ZERO = RatFunc(0)
ONE = RatFunc(1)
T = RatFunc(T_P)


def rf(num, den=1) -> RatFunc:
    """Shorthand constructor, rf(3, 2) == 3/2, rf(T_P) == t."""
    return RatFunc(num) / RatFunc(den)
