"""Exact computation of character tables, Hall-Littlewood functions, Kostka
matrices and Green functions for the complex reflection groups G(e,p,n) and
their twisted cosets.

Everything is computed over Q(zeta_e) and over rational functions in the
deformation parameter t, with no floating point anywhere; the golden tables
of the theory are reproduced exactly (see tests/test_acceptance.py).
"""

from .combinatorics import (
    CharParam,
    ClassParam,
    GroupParams,
    SimilarityPartition,
    Symbol,
    a_value,
    alpha_divide,
    alpha_truncate,
    delta,
    enumerate_char_params,
    enumerate_class_params,
    enumerate_epartitions,
    ep_str,
    f_invariant,
    make_symbol,
    orbit_data,
    similarity_order,
    theta,
)
from .exact_arith import (
    CycField,
    CycNum,
    TPoly,
    TRat,
    cyc_conjugate,
    cyc_inverse,
    cyc_make,
    cyclotomic_polynomial,
    trat_normalize,
    trat_subst_tinv,
)
from .gepn import (
    CosetTable,
    GreenSuite,
    TupleFun,
    ZCoset,
    coset_algebra,
    coset_char_table,
    fake_degrees,
    green_suite,
    kostka_gepn,
    tuple_hall_littlewood,
    tuple_powersum,
    tuple_q_m,
    tuple_schur,
    xj_variables,
    z_coset,
)
from .oracle import BruteForceGroup, GroupReport, brute_force_oracle
from .symfunc import (
    BasisExpansion,
    Level,
    SymPoly,
    VarSpace,
    cauchy_truncated,
    expand,
    level_for,
    monomial,
    powersum,
    q_product,
    q_row,
    scalar_product,
    schur,
)
from .wreath import (
    CharTable,
    HLBasis,
    LabeledMatrix,
    char_table,
    hall_littlewood,
    hl_data,
    kostka,
    z_series,
)

__all__ = [
    "BasisExpansion", "BruteForceGroup", "CharParam", "CharTable",
    "ClassParam", "CosetTable", "CycField", "CycNum", "GreenSuite",
    "GroupParams", "GroupReport", "HLBasis", "LabeledMatrix", "Level",
    "SimilarityPartition", "SymPoly", "Symbol", "TPoly", "TRat", "TupleFun",
    "VarSpace", "ZCoset", "a_value", "alpha_divide", "alpha_truncate",
    "brute_force_oracle", "cauchy_truncated", "char_table", "coset_algebra",
    "coset_char_table", "cyc_conjugate", "cyc_inverse", "cyc_make",
    "cyclotomic_polynomial", "delta", "enumerate_char_params",
    "enumerate_class_params", "enumerate_epartitions", "ep_str", "expand",
    "f_invariant", "fake_degrees", "green_suite", "hall_littlewood",
    "hl_data", "kostka", "kostka_gepn", "level_for", "make_symbol",
    "monomial", "orbit_data", "powersum", "q_product", "q_row",
    "scalar_product", "schur", "similarity_order", "theta",
    "trat_normalize", "trat_subst_tinv", "tuple_hall_littlewood",
    "tuple_powersum", "tuple_q_m", "tuple_schur", "xj_variables",
    "z_coset", "z_series",
]
