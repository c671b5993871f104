"""Reference systems and golden values used across the test suite.

The six fixture systems come from the worked examples of the source material;
their matrices, resultant values and characteristic sets are transcribed
verbatim and serve as ground truth.  Random generators for property suites
live here too, all driven by caller-provided seeded Random instances so every
suite is reproducible.
"""

from __future__ import annotations

import random

from dres import DppeSystem, LinDiffPoly, OreOp, lin, op, rf, ud, xd
from dres.ratfunc import RatFunc, T, UniPoly


# --- fixture systems -------------------------------------------------------

def intro_system() -> DppeSystem:
    """x1 = u1+u2+u2'; x2 = t*u1'+u2''; x3 = u1+u2'."""
    return DppeSystem(
        [0, 0, 0],
        [[op(-1), op(-1, -1)],
         [op(0, -T), op(0, 0, -1)],
         [op(-1), op(0, -1)]])


INTRO_IMPLICIT = lin({xd(1, 2): T - rf(1), xd(3, 1): -T, xd(3, 2): rf(1) - T, xd(2, 0): 1})


def sec31_system() -> DppeSystem:
    """F1 = x1-7t-u1-3u1'+3u2-t*u2'; F2 = x2-u1+u1''-5u2''; F3 = x3-u1+u1''-t^2*u2'."""
    return DppeSystem(
        [7 * T, 0, 0],
        [[op(-1, -3), op(3, -T)],
         [op(-1, 0, 1), op(0, 0, -5)],
         [op(-1, 0, 1), op(0, -T * T)]])


def sec3_remark_system() -> DppeSystem:
    """H1 = u1'+u2', H2 = u1+u2, H3 = u1+u1'+u2' (x_i = -H_i)."""
    return DppeSystem(
        [0, 0, 0],
        [[op(0, 1), op(0, 1)],
         [op(1), op(1)],
         [op(1, 1), op(0, 1)]])


def sec5_system() -> DppeSystem:
    """F1 = x1-t-u1-u2-2u2''; F2 = x2-t^2-2u1-u2-u2''; F3 = x3-5-u1-3u1'-u2'-u2'''."""
    return DppeSystem(
        [T, T * T, 5],
        [[op(-1), op(-1, 0, -2)],
         [op(-2), op(-1, 0, -1)],
         [op(-1, -3), op(0, -1, 0, -1)]])


def sec6_remark_system() -> DppeSystem:
    """x1 = 2u1+u1'+u2+u2''; x2 = u1+u1'+u1''+u2+u2''; x3 = u1+2u1'+u2+u2'.

    The printed x2 equation carries -u2'' but the characteristic set displayed
    with it (and the operator table, L22 = 1+d^2) pin the + sign: the three
    displayed chain elements vanish only under this parametrization.
    """
    return DppeSystem(
        [0, 0, 0],
        [[op(-2, -1), op(-1, 0, -1)],
         [op(-1, -1, -1), op(-1, 0, -1)],
         [op(-1, -2), op(-1, -1)]])


SEC6_CHAIN = (
    lin({xd(1, 2): 1, xd(2, 2): -2, xd(2, 1): -2, xd(2, 0): -1,
         xd(3, 3): 1, xd(3, 2): 1, xd(3, 1): 1, xd(3, 0): 1}),
    lin({ud(2, 0): 1, ud(1, 0): rf(3, 2), xd(1, 1): 1, xd(1, 0): rf(-1, 2),
         xd(2, 1): -2, xd(2, 0): -1, xd(3, 2): 1, xd(3, 1): rf(1, 2), xd(3, 0): rf(1, 2)}),
    lin({ud(1, 1): 1, ud(1, 0): -1, xd(1, 1): -1, xd(1, 0): 1,
         xd(2, 1): 2, xd(3, 2): -1, xd(3, 0): -1}),
)


def sec6_closing_system() -> DppeSystem:
    """x1 = u1+u1'+u2+u2'; x2 = t(u1'+u1'')+u2''; x3 = u1+u1'+u2'."""
    return DppeSystem(
        [0, 0, 0],
        [[op(-1, -1), op(-1, -1)],
         [op(0, -T, -T), op(0, 0, -1)],
         [op(-1, -1), op(0, -1)]])


# --- printed matrices ------------------------------------------------------

# Section 3.1, M(13): U-block rows (columns u25 u15 u24 u14 u23 u13 u22 u12
# u21 u11 u2 u1) and the K{X} column.
SEC31_COLUMNS = ["d(u2,5)", "d(u1,5)", "d(u2,4)", "d(u1,4)", "d(u2,3)", "d(u1,3)",
                 "d(u2,2)", "d(u1,2)", "d(u2,1)", "d(u1,1)", "u2", "u1", "1"]
SEC31_UBLOCK = [
    "-t -3 -1 -1 0 0 0 0 0 0 0 0",
    "0 0 -t -3 0 -1 0 0 0 0 0 0",
    "0 0 0 0 -t -3 1 -1 0 0 0 0",
    "0 0 0 0 0 0 -t -3 2 -1 0 0",
    "0 0 0 0 0 0 0 0 -t -3 3 -1",
    "-5 1 0 0 0 -1 0 0 0 0 0 0",
    "0 0 -5 1 0 0 0 -1 0 0 0 0",
    "0 0 0 0 -5 1 0 0 0 -1 0 0",
    "0 0 0 0 0 0 -5 1 0 0 0 -1",
    "0 1 -t^2 0 -6*t -1 -6 0 0 0 0 0",
    "0 0 0 1 -t^2 0 -4*t -1 -2 0 0 0",
    "0 0 0 0 0 1 -t^2 0 -2*t -1 0 0",
    "0 0 0 0 0 0 0 1 -t^2 0 0 -1",
]
SEC31_TAILS = [
    lin({xd(1, 4): 1}), lin({xd(1, 3): 1}), lin({xd(1, 2): 1}),
    lin({xd(1, 1): 1}, -7), lin({xd(1, 0): 1}, -7 * T),
    lin({xd(2, 3): 1}), lin({xd(2, 2): 1}), lin({xd(2, 1): 1}), lin({xd(2, 0): 1}),
    lin({xd(3, 3): 1}), lin({xd(3, 2): 1}), lin({xd(3, 1): 1}), lin({xd(3, 0): 1}),
]

# Section 5, M(11): columns u25 u24 u23 u13 u22 u12 u21 u11 u2 u1 and K{X}.
SEC5_COLUMNS = ["d(u2,5)", "d(u2,4)", "d(u2,3)", "d(u1,3)", "d(u2,2)", "d(u1,2)",
                "d(u2,1)", "d(u1,1)", "u2", "u1", "1"]
SEC5_UBLOCK = [
    "-2 0 -1 -1 0 0 0 0 0 0",
    "0 -2 0 0 -1 -1 0 0 0 0",
    "0 0 -2 0 0 0 -1 -1 0 0",
    "0 0 0 0 -2 0 0 0 -1 -1",
    "-1 0 -1 -2 0 0 0 0 0 0",
    "0 -1 0 0 -1 -2 0 0 0 0",
    "0 0 -1 0 0 0 -1 -2 0 0",
    "0 0 0 0 -1 0 0 0 -1 -2",
    "-1 0 -1 -3 0 -1 0 0 0 0",
    "0 -1 0 0 -1 -3 0 -1 0 0",
    "0 0 -1 0 0 0 -1 -3 0 -1",
]
SEC5_TAILS = [
    lin({xd(1, 3): 1}), lin({xd(1, 2): 1}), lin({xd(1, 1): 1}, -1),
    lin({xd(1, 0): 1}, -T),
    lin({xd(2, 3): 1}), lin({xd(2, 2): 1}, -2), lin({xd(2, 1): 1}, -2 * T),
    lin({xd(2, 0): 1}, -T * T),
    lin({xd(3, 2): 1}), lin({xd(3, 1): 1}), lin({xd(3, 0): 1}, -5),
]

# Displayed value of the complete resultant of the section 5 system.
SEC5_CRES = lin(
    {xd(3, 0): 4, xd(2, 1): -8, xd(3, 2): 12, xd(1, 3): 4, xd(1, 1): 4,
     xd(2, 3): -20, xd(2, 2): -8, xd(1, 2): 4, xd(1, 0): 4, xd(2, 0): -4},
    UniPoly([-8, 12, 4]))


def parse_entries(rows: list[str]) -> list[list[RatFunc]]:
    from dres.parsing import parse_coefficient
    return [[parse_coefficient(tok) for tok in row.split()] for row in rows]


# --- random generators -----------------------------------------------------

def rand_coeff(rng: random.Random, maxdeg: int = 1) -> RatFunc:
    return RatFunc(UniPoly([rng.randint(-4, 4) for _ in range(maxdeg + 1)]))


def rand_nonzero_coeff(rng: random.Random, maxdeg: int = 1) -> RatFunc:
    while True:
        c = rand_coeff(rng, maxdeg)
        if not c.is_zero():
            return c


def rand_op(rng: random.Random, maxdeg: int = 2, zero_chance: float = 0.25) -> OreOp:
    if rng.random() < zero_chance:
        return op()
    d = rng.randint(0, maxdeg)
    cs = [rand_coeff(rng) for _ in range(d + 1)]
    if cs[-1].is_zero():
        cs[-1] = RatFunc(rng.choice([1, -1, 2, -2]))
    return OreOp(cs)


def rand_system(rng: random.Random, n: int, maxdeg: int = 2) -> DppeSystem:
    while True:
        try:
            return DppeSystem([rand_coeff(rng) for _ in range(n)],
                              [[rand_op(rng, maxdeg) for _ in range(n - 1)]
                               for _ in range(n)])
        except ValueError:
            continue


def rand_nonzero_op(rng: random.Random, maxdeg: int = 2) -> OreOp:
    return rand_op(rng, maxdeg, zero_chance=0.0)


def rand_coprime_pair(rng: random.Random, d1: int, d2: int) -> tuple[OreOp, OreOp]:
    from dres import gcrd
    while True:
        l1 = rand_nonzero_op(rng, d1)
        l2 = rand_nonzero_op(rng, d2)
        if l1.deg >= 1 and l2.deg >= 0 and gcrd([l1, l2]).deg == 0:
            return l1, l2


def rand_constant_system(rng: random.Random, n: int = 3, maxdeg: int = 2) -> DppeSystem:
    while True:
        try:
            return DppeSystem(
                [RatFunc(rng.randint(-4, 4)) for _ in range(n)],
                [[rand_constant_op(rng, maxdeg) for _ in range(n - 1)] for _ in range(n)])
        except ValueError:
            continue


def rand_constant_op(rng: random.Random, maxdeg: int = 2) -> OreOp:
    if rng.random() < 0.25:
        return op()
    d = rng.randint(0, maxdeg)
    cs = [RatFunc(rng.randint(-4, 4)) for _ in range(d + 1)]
    if cs[-1].is_zero():
        cs[-1] = RatFunc(rng.choice([1, -1, 2, -2]))
    return OreOp(cs)
