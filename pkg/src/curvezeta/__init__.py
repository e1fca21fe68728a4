"""Exact arithmetic for zeta functions of curves over finite fields.

The package computes, with exact rational arithmetic throughout:

* Artin zeta functions in Weil form, from explicit point counts of curve
  models or from given numerator coefficients;
* the automorphism-weighted bundle-counting invariants alpha, beta, gamma
  in rank one and rank two;
* SL_r group zetas assembled from type A_{r-1} root-system combinatorics,
  together with their functional equations and an independent
  period-residue oracle;
* masses of semistable bundles (inclusion-exclusion sums in the completed
  zeta values, and the general-degree Harder-Narasimhan mass sum);
* a rank-two zeta family with half-integral q-powers tracked exactly, its
  functional equation, numerical Riemann-Hypothesis checks, and the
  multiplicity deformation that breaks RH for the bare family member.

Floating point appears only in the complex root finder and the RH verdicts;
every identity test is an exact rational-function identity.
"""

from curvezeta.artin import (
    CurveData,
    WeilRoots,
    artin_fe_check,
    artin_fe_ratfun_check,
    counts_from_numerator,
    numerator_from_counts,
    rh_check_artin,
    weil_roots,
    zeta_hat_special,
    zeta_plain,
)
from curvezeta.exact import (
    ComplexRootSet,
    Poly,
    RationalFunction,
    TruncatedSeries,
    ZeroReport,
    complex_roots,
    pole_regularized_value,
    ratfun_equal,
    series_exp,
    series_log,
)
from curvezeta.fields import CurveModel, FieldRep, build_field, census, count_points
from curvezeta.group_zeta import (
    SlrZeta,
    build_root_system,
    period_residue_oracle,
    slr_fe_check,
    slr_numerator,
    slr_rh_report,
    slr_zeta,
)
from curvezeta.invariants import (
    BrillNoetherTable,
    InvariantTable,
    A_from_alpha,
    alpha_from_A,
    beta0,
    elliptic_oracle,
    gamma,
    middle_coefficient_identity_check,
)
from curvezeta.mass import beta_composition_formula, beta_crosscheck, beta_hn_mass
from curvezeta.rank2 import (
    PureZeta,
    Rank2Numerator,
    pure_fe_check,
    pure_zeta,
    rank2_closed_form,
    rank2_invariants,
    rank2_numerator,
)
from curvezeta.yoshida import (
    C1Params,
    HalfShiftRational,
    WeilPairSet,
    counterexample_search,
    modulus_ordering,
    rh_check_zeta2,
    zeta2_canonical,
    zeta2_family,
)

__all__ = [
    "A_from_alpha",
    "BrillNoetherTable",
    "C1Params",
    "ComplexRootSet",
    "CurveData",
    "CurveModel",
    "FieldRep",
    "HalfShiftRational",
    "InvariantTable",
    "Poly",
    "PureZeta",
    "Rank2Numerator",
    "RationalFunction",
    "SlrZeta",
    "TruncatedSeries",
    "WeilPairSet",
    "WeilRoots",
    "ZeroReport",
    "alpha_from_A",
    "artin_fe_check",
    "artin_fe_ratfun_check",
    "beta0",
    "beta_composition_formula",
    "beta_crosscheck",
    "beta_hn_mass",
    "build_field",
    "build_root_system",
    "census",
    "complex_roots",
    "count_points",
    "counterexample_search",
    "counts_from_numerator",
    "elliptic_oracle",
    "gamma",
    "middle_coefficient_identity_check",
    "modulus_ordering",
    "numerator_from_counts",
    "period_residue_oracle",
    "pole_regularized_value",
    "pure_fe_check",
    "pure_zeta",
    "rank2_closed_form",
    "rank2_invariants",
    "rank2_numerator",
    "ratfun_equal",
    "rh_check_artin",
    "rh_check_zeta2",
    "series_exp",
    "series_log",
    "slr_fe_check",
    "slr_numerator",
    "slr_rh_report",
    "slr_zeta",
    "weil_roots",
    "zeta2_canonical",
    "zeta2_family",
    "zeta_hat_special",
    "zeta_plain",
]
