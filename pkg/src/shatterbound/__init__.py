"""Shattering-coefficient calculators for hyperplane classifiers, the
uniform-convergence bound built on them, inverse solvers for sample size
and risk divergence, and an exact brute-force oracle for the counting
formula."""

from .bounds import (
    BoundQuery,
    BoundReport,
    CurveRow,
    NoBracketError,
    delta_bound,
    emit_epsilon_curve,
    solve_max_eps,
    solve_min_n,
)
from .logarithmetic import (
    BigCount,
    LogNum,
    exact_binomial,
    log_binomial,
    log_of_bigcount,
    log_pow,
    log_sum,
)
from .oracle import (
    Dichotomy,
    PointSet,
    SeparabilityCertificate,
    count_dichotomies,
    generate_general_position,
    is_separable,
    verify_formula,
)
from .shattering import (
    HypothesisSpec,
    ShatterValue,
    asymptotic_condition,
    binom_lower_bound,
    binom_upper_bound,
    complement_count,
    epsilon_curve,
    gamma_const,
    psi,
    shatter_log,
    shatter_multi,
    shatter_single,
    shatter_upper_closed,
    shatter_value,
)

__all__ = [
    "BigCount",
    "BoundQuery",
    "BoundReport",
    "CurveRow",
    "Dichotomy",
    "HypothesisSpec",
    "LogNum",
    "NoBracketError",
    "PointSet",
    "SeparabilityCertificate",
    "ShatterValue",
    "asymptotic_condition",
    "binom_lower_bound",
    "binom_upper_bound",
    "complement_count",
    "count_dichotomies",
    "delta_bound",
    "emit_epsilon_curve",
    "epsilon_curve",
    "exact_binomial",
    "gamma_const",
    "generate_general_position",
    "is_separable",
    "log_binomial",
    "log_of_bigcount",
    "log_pow",
    "log_sum",
    "psi",
    "shatter_log",
    "shatter_multi",
    "shatter_single",
    "shatter_upper_closed",
    "shatter_value",
    "solve_max_eps",
    "solve_min_n",
    "verify_formula",
]

__version__ = "0.1.0"
