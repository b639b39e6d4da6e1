"""Exact computations with Mackey functors, Burnside rings, the ring of
subquotients and rational Dade groups of small p-groups."""

from .burnside import (BurnsideElement, MarkTable, burnside_mult, lin_kernel, lin_matrix,
                       mark_table, permutation_character)
from .dade import (DadeBasis, DadeVector, MackeyDadeVector, dade_dim, dade_restrict,
                   dade_transport, delta_position, dmu_dim, jef_res_map, underline_dmu)
from .exactla import ExactMatrix, QuotientSpace, multiply, nullspace, rank, rref, solve
from .groups import (BUILTINS, FiniteGroup, GroupError, QuotientGroup, Subgroup,
                     SubgroupLattice, Subquotient, SubquotientClasses, all_subgroups,
                     conjugate, double_cosets, is_conjugate, is_cyclic, make_group,
                     normalizer, subquotient_classes, weyl)
from .lambda_ring import (LambdaElement, alpha, burnside_embed, lambda_mult, lin_mu,
                          lin_mu_direct, lin_mu_kernel, lin_mu_via_alpha, sq_ss_bijection)
from .mackey.algebra import MackeyAlgebra, MackeyBasisElement, build_algebra
from .mackey.functors import (MackeyFunctorData, bar, burnside_functor, check_bar_compatibility,
                              check_relations, fixed_point_functor, permutation_functor,
                              twin_dual)

__version__ = "0.1.0"

__all__ = [
    "BurnsideElement",
    "MarkTable",
    "burnside_mult",
    "lin_kernel",
    "lin_matrix",
    "mark_table",
    "permutation_character",
    "DadeBasis",
    "DadeVector",
    "MackeyDadeVector",
    "dade_dim",
    "dade_restrict",
    "dade_transport",
    "delta_position",
    "dmu_dim",
    "jef_res_map",
    "underline_dmu",
    "ExactMatrix",
    "QuotientSpace",
    "multiply",
    "nullspace",
    "rank",
    "rref",
    "solve",
    "BUILTINS",
    "FiniteGroup",
    "GroupError",
    "QuotientGroup",
    "Subgroup",
    "SubgroupLattice",
    "Subquotient",
    "SubquotientClasses",
    "all_subgroups",
    "conjugate",
    "double_cosets",
    "is_conjugate",
    "is_cyclic",
    "make_group",
    "normalizer",
    "subquotient_classes",
    "weyl",
    "LambdaElement",
    "alpha",
    "burnside_embed",
    "lambda_mult",
    "lin_mu",
    "lin_mu_direct",
    "lin_mu_kernel",
    "lin_mu_via_alpha",
    "sq_ss_bijection",
    "MackeyAlgebra",
    "MackeyBasisElement",
    "build_algebra",
    "MackeyFunctorData",
    "bar",
    "burnside_functor",
    "check_bar_compatibility",
    "check_relations",
    "fixed_point_functor",
    "permutation_functor",
    "twin_dual",
]
