"""Shattering-coefficient formulas for affine-hyperplane classifiers.

The count of distinct labelings that p hyperplanes in an h-dimensional
space can realize on n points in general position is

    2 * sum_{i=0}^{h} C(n-1, i)**p

Everything here evaluates that quantity and its relatives: the complement
against the full 2^n labeling space, a closed-form geometric-series upper
bound, the binomial sandwich (m/k)^k <= C(m,k) <= (e*m/k)^k, and the
divergence curve eps(n) that the convergence condition induces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .logarithmetic import (
    LN2,
    BigCount,
    LogNum,
    exact_binomial,
    log_binomial,
    log_of_bigcount,
    log_pow,
    log_sum,
)

__all__ = [
    "HypothesisSpec",
    "ShatterValue",
    "shatter_single",
    "shatter_multi",
    "shatter_log",
    "shatter_value",
    "complement_count",
    "shatter_upper_closed",
    "binom_lower_bound",
    "binom_upper_bound",
    "gamma_const",
    "epsilon_curve",
    "psi",
    "asymptotic_condition",
    "is_saturated",
]


@dataclass(frozen=True)
class HypothesisSpec:
    """Classifier family: p affine hyperplanes in an h-dimensional space."""

    h: int
    p: int = 1

    def __post_init__(self) -> None:
        if self.h < 0:
            raise ValueError(f"dimension h must be nonnegative, got {self.h}")
        if self.p < 1:
            raise ValueError(f"hyperplane count p must be positive, got {self.p}")


@dataclass(frozen=True)
class ShatterValue:
    """A shattering count with both computation paths bundled.

    ``exact`` is None when only the log path ran. ``saturated`` marks
    h >= n-1, where the count equals 2^n and no labeling is excluded.
    """

    n: int
    spec: HypothesisSpec
    log: LogNum
    exact: BigCount | None = None
    saturated: bool = False


def _require_positive_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"sample size n must be positive, got {n}")


def is_saturated(n: int, h: int) -> bool:
    """True when every one of the 2^n labelings is realizable (h >= n-1)."""
    return h >= n - 1


def shatter_single(n: int, h: int) -> BigCount:
    """2 * sum_{i=0}^{h} C(n-1, i), exactly.

    Equals 2^n whenever h >= n-1 (the whole binomial row is included).
    """
    if h < 0:
        raise ValueError(f"dimension h must be nonnegative, got {h}")
    _require_positive_n(n)
    # terms with i > n-1 vanish, so the loop never needs to pass the row end
    return 2 * sum(exact_binomial(n - 1, i) for i in range(min(h, n - 1) + 1))


def shatter_multi(n: int, spec: HypothesisSpec) -> BigCount:
    """2 * sum_{i=0}^{h} C(n-1, i)**p, exactly; reduces to shatter_single at p=1."""
    _require_positive_n(n)
    return 2 * sum(
        exact_binomial(n - 1, i) ** spec.p for i in range(min(spec.h, n - 1) + 1)
    )


def shatter_log(n: int, spec: HypothesisSpec) -> LogNum:
    """Log-domain twin of shatter_multi, for n where the count has hundreds of digits."""
    _require_positive_n(n)
    acc = LogNum.zero()
    for i in range(min(spec.h, n - 1) + 1):
        acc = log_sum(acc, log_pow(log_binomial(n - 1, i), spec.p))
    return LogNum(LN2 + acc.log_value)


def shatter_value(n: int, spec: HypothesisSpec, exact: bool = True) -> ShatterValue:
    """Bundle both paths plus the saturation flag for reporting."""
    log = shatter_log(n, spec)
    count = shatter_multi(n, spec) if exact else None
    return ShatterValue(
        n=n, spec=spec, log=log, exact=count, saturated=is_saturated(n, spec.h)
    )


def complement_count(n: int, h: int) -> BigCount:
    """2 * sum_{i=h+1}^{n} C(n-1, i): the labelings a dimension-h bias excludes.

    Satisfies shatter_single(n, h) + complement_count(n, h) == 2**n exactly.
    """
    if h < 0:
        raise ValueError(f"dimension h must be nonnegative, got {h}")
    _require_positive_n(n)
    return 2 * sum(exact_binomial(n - 1, i) for i in range(h + 1, n + 1))


def _hyperplane_series_core_log(n: int, h: int) -> float:
    """ln of 2e(n-1) * (e^h (n-1)^h - 1) / (e(n-1) - 1), the geometric-series
    closed form of 2 * sum_{i=1}^{h} (e(n-1))^i. Requires n >= 2, h >= 1."""
    if n < 2:
        raise ValueError(f"closed-form bound needs n >= 2, got {n}")
    if h < 1:
        raise ValueError(f"closed-form bound needs h >= 1, got {h}")
    ln_ratio = 1.0 + math.log(n - 1)  # ln(e(n-1))
    # ln(e^h (n-1)^h - 1) and ln(e(n-1) - 1), both arguments > 1 here
    ln_numer = h * ln_ratio + math.log1p(-math.exp(-h * ln_ratio))
    ln_denom = ln_ratio + math.log1p(-math.exp(-ln_ratio))
    return LN2 + ln_ratio + ln_numer - ln_denom


def shatter_upper_closed(n: int, spec: HypothesisSpec) -> LogNum:
    """ln of [2e(n-1)(e^h (n-1)^h - 1)/(e(n-1) - 1) + 2]**p.

    Dominates shatter_log for every n >= 2: each binomial is bounded by
    (e(n-1)/i)^i <= (e(n-1))^i and the resulting geometric series is summed
    in closed form.
    """
    bracket = log_sum(
        LogNum(_hyperplane_series_core_log(n, spec.h)), LogNum(LN2)
    )
    return log_pow(bracket, spec.p)


def binom_lower_bound(m: int, k: int) -> LogNum:
    """ln (m/k)^k, a lower bound for ln C(m, k); needs m >= k > 0."""
    _require_sandwich_args(m, k)
    return LogNum(k * math.log(m / k))


def binom_upper_bound(m: int, k: int) -> LogNum:
    """ln (e*m/k)^k, an upper bound for ln C(m, k); needs m >= k > 0."""
    _require_sandwich_args(m, k)
    return LogNum(k * (1.0 + math.log(m / k)))


def _require_sandwich_args(m: int, k: int) -> None:
    if k <= 0 or k > m:
        raise ValueError(f"bounds hold for m >= k > 0, got (m={m}, k={k})")


def gamma_const(spec: HypothesisSpec) -> float:
    """The constant p*ln(2) + h*p collecting the n-free terms of the bound."""
    return spec.p * LN2 + spec.h * spec.p


def epsilon_curve(n: int, spec: HypothesisSpec) -> float:
    """Divergence eps(n) = 2*sqrt(h*p*ln(n) + gamma) / sqrt(n).

    The eps at which the exponential and polynomial parts of the bound
    balance; grows with h and p, eventually decays in n.
    """
    if n < 2:
        raise ValueError(f"divergence curve needs n >= 2, got {n}")
    return 2.0 * math.sqrt(spec.h * spec.p * math.log(n) + gamma_const(spec)) / math.sqrt(n)


def _require_eps(eps: float) -> None:
    if not 0.0 < eps < 1.0:
        raise ValueError(f"divergence eps must lie in (0, 1), got {eps}")


def psi(n: int, spec: HypothesisSpec, eps: float) -> float:
    """Signed convergence margin of the closed-form bound.

    psi = p * ln(2e(n-1)(e^h (n-1)^h - 1)/(e(n-1) - 1)) - n*eps^2/4.
    Negative psi means the exponential envelope shrinks to zero.
    """
    _require_eps(eps)
    return spec.p * _hyperplane_series_core_log(n, spec.h) - n * eps * eps / 4.0


def asymptotic_condition(n: int, spec: HypothesisSpec, eps: float) -> float:
    """p*ln(2) + h*p + h*p*ln(n) - n*eps^2/4; negative once learning is ensured."""
    if n < 2:
        raise ValueError(f"asymptotic condition needs n >= 2, got {n}")
    _require_eps(eps)
    return gamma_const(spec) + spec.h * spec.p * math.log(n) - n * eps * eps / 4.0
