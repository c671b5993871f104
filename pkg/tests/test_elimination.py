import random

import pytest

from dres import (COMPLETE, FULL, DppeSystem, RANK_RSTAR, build_matrix, build_ps,
                  canonical_form, characteristic_set, column_gcrds, dcres, dcres_h,
                  det_bordered, dres, echelon, echelon_matrix,
                  evaluate_on_parametrization, implicitize, inversion_maps, lin, op,
                  prem_linear, properness, reduce_system, ud, vanishing_oracle, xd)
from dres.ratfunc import RatFunc, T, UniPoly

from fixtures import (INTRO_IMPLICIT, SEC6_CHAIN, intro_system, rand_system,
                      sec5_system, sec6_closing_system, sec6_remark_system,
                      sec31_system)


def _row_vectors(polys, cols):
    return [[p.coeff(c) for c in cols] + [p.constant] for p in polys]


def test_echelon_g0_nonempty_and_same_row_space():
    from dres.linalg import rank_ratfunc
    rng = random.Random(51)
    for trial in range(12):
        s = rand_system(rng, rng.choice([2, 3]))
        ps = build_ps(s, FULL)
        basis = echelon(ps)
        assert basis.g0(), trial
        originals = [p for (_, _, p) in ps.entries]
        cols = sorted({d for p in list(basis.rows) + originals for d in p.terms},
                      key=RANK_RSTAR.key, reverse=True)
        a = _row_vectors(originals, cols)
        b = _row_vectors(basis.rows, cols)
        ra, rb, rab = rank_ratfunc(a), rank_ratfunc(b), rank_ratfunc(a + b)
        assert ra == rb == rab == len(basis.rows), trial


def test_echelon_det_relation():
    # det(M(L)) = +- det_scale * det(E(L)) with E the monic echelon matrix
    for s in (sec31_system(), sec5_system(), intro_system()):
        variant = COMPLETE
        ps = build_ps(s, variant)
        m = build_matrix(ps)
        basis = echelon(ps)
        lhs = det_bordered(m)
        rhs = det_bordered(echelon_matrix(basis)).scale(basis.det_scale)
        assert lhs == rhs or lhs == rhs.scale(-1)


def test_echelon_single_g0_iff_cres_h_nonzero():
    rng = random.Random(52)
    seen_zero = seen_nonzero = 0
    for _ in range(25):
        s = rand_system(rng, rng.choice([2, 3]))
        basis = echelon(build_ps(s, COMPLETE))
        if dcres_h(s).is_zero():
            assert len(basis.g0()) > 1
            seen_zero += 1
        else:
            assert len(basis.g0()) == 1
            seen_nonzero += 1
    assert seen_zero and seen_nonzero


def test_characteristic_set_sec6_remark_exact():
    basis = echelon(build_ps(sec6_remark_system(), FULL))
    chain = characteristic_set(basis)
    assert len(chain) == 3
    assert tuple(chain) == SEC6_CHAIN
    assert [str(p.lead(RANK_RSTAR)) for p in chain] == ["d(x1,2)", "u2", "d(u1,1)"]


def test_characteristic_set_nondegenerate_shape():
    basis = echelon(build_ps(sec5_system(), COMPLETE))
    chain = characteristic_set(basis)
    assert len(chain) == 3
    assert not chain[0].has_u_terms()
    assert chain[1].lead(RANK_RSTAR) == ud(1, 0)
    assert chain[2].lead(RANK_RSTAR) == ud(2, 0)


def test_characteristic_set_single_equation_chain():
    s = DppeSystem([0, 0], [[op(-1)], [op(0, -1)]])
    basis = echelon(build_ps(s, FULL))
    chain = characteristic_set(basis)
    assert chain[0] == canonical_form(lin({xd(1, 1): 1, xd(2, 0): -1})).scale(1)


def test_inversion_maps_sec5():
    sys5 = sec5_system()
    basis = echelon(build_ps(sys5, COMPLETE))
    maps = inversion_maps(basis)
    assert len(maps) == 2
    rng = random.Random(53)
    for trial in range(5):
        uvals = [RatFunc(UniPoly([rng.randint(-5, 5) for _ in range(4)]))
                 for _ in range(2)]
        for j, umap in enumerate(maps):
            got = evaluate_on_parametrization(sys5, umap, uvals)
            assert got == uvals[j], (trial, j)


def test_inversion_maps_identity_like():
    # x1 = u1, x2 = u2, x3 = u1+u2: reading off x3's row gives u2 = x2 directly
    # and u1 = x3 - x2 (equal to x1 modulo the implicit equation)
    s = DppeSystem([0, 0, 0],
                   [[op(-1), op()], [op(), op(-1)], [op(-1), op(-1)]])
    maps = inversion_maps(echelon(build_ps(s, FULL)))
    assert maps[1] == lin({xd(2, 0): 1})
    assert maps[0] in (lin({xd(1, 0): 1}), lin({xd(3, 0): 1, xd(2, 0): -1}))
    for j, m in enumerate(maps):
        uvals = [RatFunc(UniPoly([1, 2])), RatFunc(UniPoly([3, 0, 1]))]
        assert evaluate_on_parametrization(s, m, uvals) == uvals[j]


def test_inversion_maps_error_when_improper():
    basis = echelon(build_ps(sec6_remark_system(), FULL))
    with pytest.raises(ValueError, match="improper or degenerate"):
        inversion_maps(basis)


def test_column_gcrds_and_reduce_sec6_closing():
    s = sec6_closing_system()
    gs = column_gcrds(s)
    assert str(gs[0]) == "d + 1"
    assert gs[1].deg == 0
    assert reduce_system(s) == intro_system()


def test_reduce_identity_when_coprime():
    s = sec5_system()
    assert reduce_system(s) == s


def test_reduce_scalar_multiple_column():
    base = op(1, 1)
    s = DppeSystem([0, 0], [[base.scale(2)], [base.scale(-3)]])
    red = reduce_system(s)
    assert red.ops[0][0] == op(2) and red.ops[1][0] == op(-3)


def test_properness_fixtures():
    assert properness(sec5_system()) == ("proper", [])
    v, w = properness(sec6_remark_system())
    assert v == "improper" and any("u1" in x for x in w)
    v, w = properness(sec6_closing_system())
    assert v == "improper" and any("d + 1" in x for x in w)


def test_implicitize_intro():
    res = implicitize(intro_system())
    assert res.method == "cres"
    assert res.gamma == 1 and res.gammas == (1, 0)
    assert res.implicit == canonical_form(INTRO_IMPLICIT)
    assert res.proper == "proper"
    assert res.dimension == 2
    assert res.inversion is not None and len(res.inversion) == 2


def test_implicitize_sec6_remark():
    res = implicitize(sec6_remark_system())
    assert res.method == "echelon"
    assert res.proper == "improper"
    assert res.dimension == 2
    assert res.implicit == canonical_form(SEC6_CHAIN[0])
    assert tuple(res.char_set) == SEC6_CHAIN
    assert res.inversion is None
    assert all(g.deg == 0 for g in column_gcrds(sec6_remark_system()))


def test_implicitize_sec6_closing():
    res = implicitize(sec6_closing_system())
    assert res.method == "cres-reduced"
    assert res.proper == "improper"
    assert res.implicit == implicitize(intro_system()).implicit
    assert res.reduced_system == intro_system()
    assert res.cres_h == RatFunc(0)
    assert res.cres_h_reduced is not None and not res.cres_h_reduced.is_zero()


def test_implicitize_dimension_drop():
    # x1 = u1+u2, x2 = u1+u2, x3 = 2u1+2u2: one independent combination
    s = DppeSystem([0, 1, 0],
                   [[op(-1), op(-1)], [op(-1), op(-1)], [op(-2), op(-2)]])
    res = implicitize(s)
    assert res.implicit is None
    assert res.dimension == 1
    assert len(res.char_set_x) == 2
    for p in res.char_set_x:
        assert vanishing_oracle(s, p, 5)


def test_cres_proportional_to_b0():
    rng = random.Random(54)
    checked = 0
    for _ in range(15):
        s = rand_system(rng, rng.choice([2, 3]))
        if dcres_h(s).is_zero():
            continue
        cr = dcres(s)
        b0 = echelon(build_ps(s, COMPLETE)).g0()[0]
        assert canonical_form(cr) == canonical_form(b0)
        checked += 1
    assert checked >= 5


def test_implicitize_passes_oracle():
    rng = random.Random(55)
    for trial in range(10):
        s = rand_system(rng, rng.choice([2, 3]))
        res = implicitize(s)
        if res.implicit is not None:
            assert vanishing_oracle(s, res.implicit, 5), trial


def test_oracle_rejects_non_members():
    s = intro_system()
    assert not vanishing_oracle(s, lin({xd(1, 0): 1}), 3)
    with pytest.raises(ValueError):
        vanishing_oracle(s, lin({xd(1, 0): 1}), 0)


def test_oracle_fixed_substitution():
    # intro example with u1 = t, u2 = t^2 by hand
    s = intro_system()
    val = evaluate_on_parametrization(s, INTRO_IMPLICIT,
                                      [T, T * T])
    assert val.is_zero()
