"""Exact basic representation of the double affine Hecke algebra at critical level q = 1.

Typical use::

    from critdaha import build_root_system, CoeffRing, BasicRepresentation, verify_braid
    rs = build_root_system(family="C", rank=2, twist="twisted")
    rep = BasicRepresentation(CoeffRing(rs))
    verify_braid(rep, 0, 1).status   # 'pass'
"""

from .basic_rep import (BasicRepresentation, demazure_lusztig, invert_triangular, pbw_independence,
                        rep_image, triangular_expand, verify_braid, verify_cross,
                        verify_cross_additivity, verify_omega, verify_omega_descent,
                        verify_quadratic)
from .laurent import Laurent
from .poly_rep import LevelledAction, affine_weight_action, dl_poly_apply, verify_poly_presentation
from .rational import CoeffRing, RationalFn, is_delta_tau_unit, specialize_fn
from .report import CaseRecord, VerificationReport
from .roots import AffineRoot, RootSystemSpec, build_root_system, parabolic_subsystem
from .smash import SmashElt, embed_fn, embed_group
from .suites import RunConfig, run
from .weyl import affine_weyl_group, bruhat_leq, compute_omega, enumerate_ball

__version__ = "0.1.0"

__all__ = [
    "AffineRoot", "BasicRepresentation", "CaseRecord", "CoeffRing", "Laurent", "LevelledAction",
    "RationalFn", "RootSystemSpec", "RunConfig", "SmashElt", "VerificationReport",
    "affine_weight_action", "affine_weyl_group", "bruhat_leq", "build_root_system",
    "compute_omega", "demazure_lusztig", "dl_poly_apply", "embed_fn", "embed_group",
    "enumerate_ball", "invert_triangular", "is_delta_tau_unit", "parabolic_subsystem",
    "pbw_independence", "rep_image", "run", "specialize_fn", "triangular_expand", "verify_braid",
    "verify_cross", "verify_cross_additivity", "verify_omega", "verify_omega_descent",
    "verify_poly_presentation", "verify_quadratic",
]
