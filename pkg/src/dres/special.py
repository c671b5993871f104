"""Closed-form implicitization for two equations, and for three with constant
coefficients.

With a single parameter the implicit equation comes from cross-applying the
two operators after a commutator correction; with constant coefficients and
three equations the operators commute and the implicit polynomial is the
bordered 3x3 operator determinant applied to the x_i - a_i.
"""

from __future__ import annotations

from .diffpoly import DppeSystem, LinDiffPoly, X, canonical_form
from .oreops import OreOp, commutator_correction, gcrd
from .ratfunc import RatFunc
from .resultant import det_exact, s_matrix, s_minor


def apply_to_t(op: OreOp, sys: DppeSystem, i: int) -> LinDiffPoly:
    """Apply an operator to x_i - a_i (1-based i)."""
    return op.apply(X, i) + LinDiffPoly({}, -op.apply_to_const(sys.a[i - 1]))


def coprimality_n2(l1: OreOp, l2: OreOp) -> tuple[bool, OreOp]:
    """Whether the operator pair is coprime, with the monic gcrd as certificate."""
    g = gcrd([l1, l2])
    return g.deg == 0, g


def implicit_n2(sys: DppeSystem) -> LinDiffPoly:
    """Implicit equation of a 2-equation system, canonically normalized.

    Removes the common right factor first, then corrects for the commutator
    and eliminates the parameter by cross-application:
    (L2 - D2)(x1 - a1) - (L1 - D1)(x2 - a2).
    """
    if sys.n != 2:
        raise ValueError("closed form applies to systems of 2 equations only")
    l1, l2 = sys.ops[0][0], sys.ops[1][0]
    g = gcrd([l1, l2])
    if g.deg > 0:
        l1 = l1.right_div_exact(g)
        l2 = l2.right_div_exact(g)
    d1, d2 = commutator_correction(l1, l2)
    a = apply_to_t(l2 - d2, sys, 1) - apply_to_t(l1 - d1, sys, 2)
    return canonical_form(a)


def implicit_n3_const(sys: DppeSystem) -> LinDiffPoly:
    """Implicit-ideal member for a 3-equation system over constant coefficients.

    Returns P(X), the bordered determinant expansion
    L21 L32 (x1-a1) - L22 L31 (x1-a1) - L11 L32 (x2-a2) + L12 L31 (x2-a2)
    + L11 L22 (x3-a3) - L12 L21 (x3-a3), not normalized: its coefficients
    carry the minor identities used by the factorization of the complete
    resultant.
    """
    if sys.n != 3:
        raise ValueError("closed form applies to systems of 3 equations only")
    for row in sys.ops:
        for op in row:
            if any(not c.is_rational() for c in op.coeffs):
                raise ValueError("non-constant operator coefficients: general pipeline required")
    s = s_matrix(sys, complete=True)
    if all(det_exact(s_minor(s, i)).is_zero() for i in (1, 2, 3)):
        raise ArithmeticError("all minors of the top-coefficient matrix vanish; "
                              "closed form does not certify an implicit-ideal member")
    (l11, l12), (l21, l22), (l31, l32) = sys.ops
    p = apply_to_t(l21 * l32 - l22 * l31, sys, 1)
    p = p - apply_to_t(l11 * l32 - l12 * l31, sys, 2)
    p = p + apply_to_t(l11 * l22 - l12 * l21, sys, 3)
    return p
