"""Text grammar for parametric systems.

One equation per line, ``x<i> = <expr>``, where the expression is linear in
the parameters u1..u(n-1) with rational-function coefficients in t:

    x1 = u1 + u2 + u2'
    x2 = (t^2+1)/(t-1)*u1'' + 3/2*t
    x3 = u1 + d(u2,1)

Derivatives are postfix apostrophes or ``d(u2,2)``; ``t`` is the base
variable and ``d`` is reserved.  ``#`` starts a comment.  Diagnostics carry
line and column.
"""

from __future__ import annotations

from typing import NamedTuple

from .diffpoly import DppeSystem
from .oreops import OreOp
from .ratfunc import RatFunc, T, UniPoly


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    col: int


_OPS = set("+-*/^()=,'")


def _tokenize(text: str) -> list[Token]:
    tokens = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch.isdigit():
                j = i
                while j < len(line) and line[j].isdigit():
                    j += 1
                tokens.append(Token("INT", line[i:j], ln, col))
                i = j
            elif ch.isalpha():
                j = i
                while j < len(line) and line[j].isalpha():
                    j += 1
                while j < len(line) and line[j].isdigit():
                    j += 1
                tokens.append(Token("NAME", line[i:j], ln, col))
                i = j
            elif ch in _OPS:
                tokens.append(Token("OP", ch, ln, col))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", ln, col)
        tokens.append(Token("EOL", "", ln, len(line) + 1))
    return tokens


class _Lin:
    """Linear form: a rational-function constant plus parameter-derivative terms."""

    __slots__ = ("const", "terms")

    def __init__(self, const=RatFunc(0), terms=None):
        self.const = const
        self.terms = terms or {}

    def is_const(self):
        return not self.terms

    def add(self, other, sign=1):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, RatFunc(0)) + sign * c
        return _Lin(self.const + sign * other.const,
                    {k: c for k, c in terms.items() if not c.is_zero()})

    def scale(self, c):
        return _Lin(self.const * c, {k: v * c for k, v in self.terms.items()
                                     if not (v * c).is_zero()})


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.value != value:
            raise ParseError(f"expected {value!r}", tok.line, tok.col)
        return self.next()

    def at_op(self, *values) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.value in values

    # expr := ['-'] term (('+'|'-') term)*
    def expr(self) -> _Lin:
        if self.at_op("-"):
            self.next()
            acc = _Lin().add(self.term(), -1)
        else:
            acc = self.term()
        while self.at_op("+", "-"):
            op = self.next().value
            acc = acc.add(self.term(), 1 if op == "+" else -1)
        return acc

    # term := factor (('*'|'/') factor)*
    def term(self) -> _Lin:
        acc = self.factor()
        while self.at_op("*", "/"):
            tok = self.next()
            rhs = self.factor()
            if tok.value == "*":
                if not acc.is_const() and not rhs.is_const():
                    raise ParseError("nonlinear term: product of two parameter terms",
                                     tok.line, tok.col)
                if acc.is_const():
                    acc = rhs.scale(acc.const)
                else:
                    acc = acc.scale(rhs.const)
            else:
                if not rhs.is_const():
                    raise ParseError("cannot divide by a parameter term", tok.line, tok.col)
                if rhs.const.is_zero():
                    raise ParseError("division by zero", tok.line, tok.col)
                acc = acc.scale(rhs.const.inverse())
        return acc

    # factor := atom ['^' INT]
    def factor(self) -> _Lin:
        acc = self.atom()
        while self.at_op("^"):
            tok = self.next()
            etok = self.peek()
            if etok.kind != "INT":
                raise ParseError("exponent must be a nonnegative integer", etok.line, etok.col)
            self.next()
            if not acc.is_const():
                raise ParseError("nonlinear term: power of a parameter term",
                                 tok.line, tok.col)
            e = int(etok.value)
            v = RatFunc(1)
            for _ in range(e):
                v = v * acc.const
            acc = _Lin(v)
        return acc

    def atom(self) -> _Lin:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return _Lin(RatFunc(int(tok.value)))
        if tok.kind == "OP" and tok.value == "(":
            self.next()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "OP" and tok.value == "-":
            self.next()
            return _Lin().add(self.factor(), -1)
        if tok.kind == "NAME":
            return self.name_atom()
        raise ParseError("expected a number, name or parenthesized expression",
                         tok.line, tok.col)

    def name_atom(self) -> _Lin:
        tok = self.next()
        name = tok.value
        if name == "t":
            return _Lin(T)
        if name == "d":
            self.expect_op("(")
            utok = self.peek()
            j = self._u_index(utok)
            self.next()
            self.expect_op(",")
            otok = self.peek()
            if otok.kind != "INT":
                raise ParseError("derivative order must be a nonnegative integer",
                                 otok.line, otok.col)
            self.next()
            self.expect_op(")")
            return _Lin(terms={(j, int(otok.value)): RatFunc(1)})
        if name.startswith("u"):
            j = self._u_index(tok)
            order = 0
            while self.at_op("'"):
                self.next()
                order += 1
            return _Lin(terms={(j, order): RatFunc(1)})
        if name.startswith("x"):
            raise ParseError("x names are not allowed on the right-hand side",
                             tok.line, tok.col)
        raise ParseError(f"unknown symbol {name!r}", tok.line, tok.col)

    @staticmethod
    def _u_index(tok: Token) -> int:
        name = tok.value
        if tok.kind != "NAME" or not name.startswith("u") or not name[1:].isdigit():
            raise ParseError("expected a parameter name u<j>", tok.line, tok.col)
        j = int(name[1:])
        if j < 1:
            raise ParseError("parameter indices start at 1", tok.line, tok.col)
        return j


def parse_system(text: str) -> DppeSystem:
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    equations: dict[int, _Lin] = {}
    positions: dict[int, Token] = {}
    while parser.pos < len(tokens):
        tok = parser.peek()
        if tok.kind == "EOL":
            parser.next()
            continue
        if tok.kind != "NAME" or not tok.value.startswith("x") or not tok.value[1:].isdigit():
            raise ParseError("an equation must start with x<i>", tok.line, tok.col)
        i = int(tok.value[1:])
        if i < 1:
            raise ParseError("equation indices start at 1", tok.line, tok.col)
        if i in equations:
            raise ParseError(f"duplicate equation for x{i}", tok.line, tok.col)
        parser.next()
        parser.expect_op("=")
        equations[i] = parser.expr()
        positions[i] = tok
        end = parser.peek()
        if end.kind != "EOL":
            raise ParseError("unexpected trailing input after the equation", end.line, end.col)
        parser.next()
    if not equations:
        raise ParseError("no equations found", 1, 1)
    n = len(equations)
    for i in sorted(equations):
        if i > n:
            tok = positions[i]
            raise ParseError(f"equation indices are not contiguous: found x{i} among "
                             f"{n} equations", tok.line, tok.col)
    for i, form in equations.items():
        for (j, _), _c in form.terms.items():
            if j > n - 1:
                tok = positions[i]
                raise ParseError(f"parameter u{j} is out of range: {n} equations allow "
                                 f"u1..u{n - 1}", tok.line, tok.col)
    used = {j for form in equations.values() for (j, _k) in form.terms}
    for j in range(1, n):
        if j not in used:
            raise ParseError(f"parameter u{j} does not occur in any equation", 1, 1)
    a = []
    ops = []
    for i in range(1, n + 1):
        form = equations[i]
        a.append(form.const)
        row = []
        for j in range(1, n):
            coeffs: dict[int, RatFunc] = {}
            for (jj, k), c in form.terms.items():
                if jj == j:
                    coeffs[k] = c
            if coeffs:
                top = max(coeffs)
                row.append(OreOp([-coeffs.get(k, RatFunc(0)) for k in range(top + 1)]))
            else:
                row.append(OreOp())
        ops.append(row)
    return DppeSystem(a, ops)


def parse_coefficient(text: str) -> RatFunc:
    """Parse a rational-function literal in t (no parameters allowed)."""
    tokens = _tokenize(text)
    parser = _Parser(tokens)
    form = parser.expr()
    tok = parser.peek()
    if tok.kind != "EOL" or parser.pos != len(tokens) - 1:
        raise ParseError("unexpected trailing input", tok.line, tok.col)
    if not form.is_const():
        raise ParseError("parameters are not allowed in a coefficient", 1, 1)
    return form.const
