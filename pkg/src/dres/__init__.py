"""Exact implicitization of linear differential parametric systems over Q(t)."""

from .ratfunc import RatFunc, UniPoly, T, rf
from .oreops import OreOp, D, commutator_correction, gcrd, op
from .diffpoly import (Derivative, DppeSystem, LinDiffPoly, ORDERLY_U, RANK_R,
                       RANK_RSTAR, RankingSpec, canonical_form, lin, prem_linear,
                       ud, xd)
from .resultant import (COMPLETE, COMPLETE_H, FULL, HOMOGENEOUS, CoeffMatrix,
                        PsSet, build_matrix, build_ps, dcres, dcres_h, det_bordered,
                        det_exact, dres, dres_h, s_matrix, s_minor, u_block_rank)
from .elimination import (EchelonBasis, ImplicitResult, characteristic_set,
                          column_gcrds, echelon, echelon_matrix,
                          evaluate_on_parametrization, implicitize, inversion_maps,
                          properness, reduce_system, vanishing_oracle)
from .special import coprimality_n2, implicit_n2, implicit_n3_const
from .parsing import ParseError, parse_coefficient, parse_system

__version__ = "0.1.0"

__all__ = [
    "RatFunc", "UniPoly", "T", "rf",
    "OreOp", "D", "op", "gcrd", "commutator_correction",
    "Derivative", "LinDiffPoly", "DppeSystem", "RankingSpec",
    "ORDERLY_U", "RANK_R", "RANK_RSTAR",
    "lin", "xd", "ud", "prem_linear", "canonical_form",
    "PsSet", "CoeffMatrix", "FULL", "HOMOGENEOUS", "COMPLETE", "COMPLETE_H",
    "build_ps", "build_matrix", "det_exact", "det_bordered", "u_block_rank",
    "dres", "dres_h", "dcres", "dcres_h", "s_matrix", "s_minor",
    "EchelonBasis", "echelon", "echelon_matrix", "characteristic_set",
    "inversion_maps", "column_gcrds", "reduce_system", "properness",
    "ImplicitResult", "implicitize", "vanishing_oracle", "evaluate_on_parametrization",
    "implicit_n2", "implicit_n3_const", "coprimality_n2",
    "parse_system", "parse_coefficient", "ParseError",
]
