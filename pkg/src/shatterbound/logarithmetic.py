"""Exact big-integer and log-domain arithmetic shared by every formula path.

Counts of realizable labelings blow past any fixed-precision float long
before the sample sizes of interest, so every quantity travels either as a
python int (exact) or as its natural logarithm (LogNum). The two paths are
kept mutually checkable: anything computed in log space can be compared
against the exact integer it represents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BigCount",
    "LogNum",
    "LN2",
    "exact_binomial",
    "log_binomial",
    "log_sum",
    "log_pow",
    "log_of_bigcount",
]

LN2 = math.log(2.0)

# Arbitrary-precision nonnegative integer; python ints are already exact
# under +, * and ** so no wrapper type is needed.
BigCount = int


@dataclass(frozen=True, order=True)
class LogNum:
    """A nonnegative extended-real stored as its natural log.

    ``-inf`` encodes zero. NaN is rejected outright, which keeps the
    ordering (inherited from the float) total.
    """

    log_value: float

    def __post_init__(self) -> None:
        if math.isnan(self.log_value):
            raise ValueError("LogNum cannot carry NaN")

    @classmethod
    def from_value(cls, x: float) -> "LogNum":
        """Encode a nonnegative linear-scale value."""
        if x < 0:
            raise ValueError(f"LogNum represents nonnegative quantities, got {x}")
        return cls(math.log(x)) if x > 0 else cls(float("-inf"))

    @classmethod
    def zero(cls) -> "LogNum":
        return cls(float("-inf"))

    @classmethod
    def one(cls) -> "LogNum":
        return cls(0.0)

    def is_zero(self) -> bool:
        return self.log_value == float("-inf")

    def value(self) -> float:
        """Back to linear scale; overflows to inf beyond the float range."""
        return math.exp(self.log_value)


def exact_binomial(n: int, k: int) -> BigCount:
    """C(n, k) as an exact integer; 0 when k > n, and C(n, 0) = 1.

    math.comb multiplies the k short factors directly, so even C(10**6, 3)
    costs microseconds.
    """
    return math.comb(n, k)


def log_binomial(n: int, k: int) -> LogNum:
    """ln C(n, k) via log-gamma; LogNum.zero() when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        return LogNum.zero()
    return LogNum(math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1))


def log_sum(a: LogNum, b: LogNum) -> LogNum:
    """ln(e^a + e^b), factoring out the larger term so nothing overflows.

    Identity used: ln(x + y) = ln x + ln(1 + y/x) with x >= y.
    """
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    hi, lo = (a.log_value, b.log_value) if a.log_value >= b.log_value else (b.log_value, a.log_value)
    return LogNum(hi + math.log1p(math.exp(lo - hi)))


def log_pow(a: LogNum, p: int) -> LogNum:
    """p-th power in log space, i.e. p * a; 0^p stays 0."""
    if p < 1:
        raise ValueError(f"exponent must be a positive integer, got {p}")
    return LogNum(p * a.log_value)


def log_of_bigcount(v: BigCount) -> LogNum:
    """Natural log of an exact count of any size; -inf for zero.

    math.log handles arbitrary ints without intermediate float conversion,
    so counts with hundreds of digits are fine.
    """
    if v < 0:
        raise ValueError(f"counts are nonnegative, got {v}")
    return LogNum(math.log(v)) if v > 0 else LogNum.zero()
