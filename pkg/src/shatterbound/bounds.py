"""Uniform-convergence bound on the risk divergence and its inverse solvers.

The probability that empirical and actual risk diverge by more than eps is
bounded by

    delta(n) = 2 * N(n) * exp(-n * eps^2 / 4)

with N(n) the shattering count 2 * sum_{i<=h} C(n-1, i)**p. This module
evaluates delta entirely in log space (its value underflows floats around
n ~ 10^5 already), solves for the minimal sample size reaching a target
delta, and inverts for the largest eps a given (n, delta) supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .logarithmetic import LN2, LogNum
from .shattering import HypothesisSpec, epsilon_curve, is_saturated, shatter_log

__all__ = [
    "BoundQuery",
    "BoundReport",
    "BracketTrace",
    "CurveRow",
    "NoBracketError",
    "DEFAULT_CEILING",
    "delta_bound",
    "solve_min_n",
    "solve_min_n_trace",
    "solve_max_eps",
    "emit_epsilon_curve",
    "bound_report",
    "min_n_report",
    "max_eps_report",
]

DEFAULT_CEILING = 2**63 - 1


class NoBracketError(RuntimeError):
    """The bound never crossed the target below the ceiling: (delta, eps, h, p)
    is unachievable in practice."""

    def __init__(self, delta: float, eps: float, spec: HypothesisSpec,
                 ceiling: int, last_log: float):
        self.delta = delta
        self.eps = eps
        self.spec = spec
        self.ceiling = ceiling
        self.last_log = last_log
        super().__init__(
            f"no sample size up to {ceiling} brings the bound below "
            f"delta={delta} for eps={eps}, h={spec.h}, p={spec.p} "
            f"(log-bound at ceiling: {last_log:.6g} vs target {math.log(delta):.6g})"
        )


@dataclass(frozen=True)
class BoundQuery:
    """Inputs to any of the bound operations; solvers read the subset they need."""

    spec: HypothesisSpec
    n: int | None = None
    eps: float | None = None
    delta: float | None = None

    def __post_init__(self) -> None:
        if self.n is not None and self.n < 1:
            raise ValueError(f"sample size n must be positive, got {self.n}")
        if self.eps is not None and not 0.0 < self.eps < 1.0:
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")
        if self.delta is not None and not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")


@dataclass(frozen=True)
class BracketTrace:
    """Audit record of the bracket expansion and bisection."""

    expansion: tuple[tuple[int, float], ...]
    bracket: tuple[int, int]
    bisection_steps: int
    tail_probes: tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class BoundReport:
    """One solved query: which field is the answer is named by ``primary``."""

    query: BoundQuery
    delta_log: LogNum
    primary: str
    solved_n: int | None = None
    solved_eps: float | None = None
    path: str = "log"
    saturated: bool = False
    vacuous: bool = False
    trace: BracketTrace | None = None


def delta_bound(n: int, eps: float, spec: HypothesisSpec) -> LogNum:
    """ln delta(n) = ln 2 + ln N(n) - n*eps^2/4, always on the log path.

    Values above 0 (bound exceeding 1) are returned as-is; they are vacuous
    but they are what the formula produces.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    return LogNum(LN2 + shatter_log(n, spec).log_value - n * eps * eps / 4.0)


def solve_min_n_trace(
    delta: float,
    eps: float,
    spec: HypothesisSpec,
    ceiling: int = DEFAULT_CEILING,
) -> tuple[int, BracketTrace]:
    """Smallest n with delta_bound(n) <= ln(delta), plus the search trace.

    ln delta(n) rises while the polynomial count dominates and falls once
    the exponential wins, and its increments are strictly decreasing, so it
    is unimodal; at n=1 it starts above ln 4 > 0 > ln(delta), which makes
    "bound <= target" a monotone predicate along the doubling ladder.
    Exponential expansion finds a bracket without derivatives;
    integer bisection pins the crossing; a geometric tail probe re-checks
    that the bound stays below target past the answer.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    target = math.log(delta)

    expansion: list[tuple[int, float]] = []
    lo, hi = None, None
    n = 1
    prev_log = None
    while n <= ceiling:
        cur = delta_bound(n, eps, spec).log_value
        expansion.append((n, cur))
        decreasing = prev_log is not None and cur < prev_log
        if cur <= target and (decreasing or n == 1):
            hi = n
            lo = max(1, n // 2)
            break
        prev_log = cur
        n *= 2
    if hi is None:
        last = delta_bound(ceiling, eps, spec).log_value
        if last <= target:
            hi, lo = ceiling, n // 2
            expansion.append((ceiling, last))
        else:
            raise NoBracketError(delta, eps, spec, ceiling, last)

    bracket = (lo, hi)
    steps = 0
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if delta_bound(mid, eps, spec).log_value <= target:
            hi = mid
        else:
            lo = mid
        steps += 1
    n_star = hi
    if n_star > 1:
        assert delta_bound(n_star - 1, eps, spec).log_value > target

    tail: list[tuple[int, float]] = []
    m = n_star
    for _ in range(12):
        m = min(ceiling, max(m + 1, int(m * 1.5)))
        val = delta_bound(m, eps, spec).log_value
        tail.append((m, val))
        assert val <= target, f"bound re-crossed target at n={m}"
        if m == ceiling:
            break

    return n_star, BracketTrace(
        expansion=tuple(expansion),
        bracket=bracket,
        bisection_steps=steps,
        tail_probes=tuple(tail),
    )


def solve_min_n(
    delta: float,
    eps: float,
    spec: HypothesisSpec,
    ceiling: int = DEFAULT_CEILING,
) -> int:
    """Minimal sample size guaranteeing divergence <= eps except with prob. delta."""
    n_star, _ = solve_min_n_trace(delta, eps, spec, ceiling)
    return n_star


def solve_max_eps(n: int, delta: float, spec: HypothesisSpec) -> float:
    """Largest eps supported by (n, delta): the closed-form inversion

        eps = sqrt( (4/n) * (ln(2*N(n)) - ln(delta)) )

    Returned even when >= 1 (vacuous); callers flag that case.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    log_2n = LN2 + shatter_log(n, spec).log_value
    return math.sqrt((4.0 / n) * (log_2n - math.log(delta)))


@dataclass(frozen=True)
class CurveRow:
    n: int
    h: int
    p: int
    epsilon: float


def emit_epsilon_curve(
    n_grid: list[int], specs: list[HypothesisSpec]
) -> list[CurveRow]:
    """One divergence value per (n, spec); rows ordered by (h, p, n)."""
    if not n_grid:
        raise ValueError("n_grid must be nonempty")
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise ValueError("n_grid must be strictly ascending")
    rows = []
    for spec in sorted(specs, key=lambda s: (s.h, s.p)):
        for n in n_grid:
            rows.append(CurveRow(n=n, h=spec.h, p=spec.p, epsilon=epsilon_curve(n, spec)))
    return rows


def bound_report(n: int, eps: float, spec: HypothesisSpec) -> BoundReport:
    dl = delta_bound(n, eps, spec)
    return BoundReport(
        query=BoundQuery(spec=spec, n=n, eps=eps),
        delta_log=dl,
        primary="delta_log",
        saturated=is_saturated(n, spec.h),
        vacuous=dl.log_value > 0.0,
    )


def min_n_report(
    delta: float, eps: float, spec: HypothesisSpec, ceiling: int = DEFAULT_CEILING
) -> BoundReport:
    n_star, trace = solve_min_n_trace(delta, eps, spec, ceiling)
    return BoundReport(
        query=BoundQuery(spec=spec, eps=eps, delta=delta),
        delta_log=delta_bound(n_star, eps, spec),
        primary="solved_n",
        solved_n=n_star,
        saturated=is_saturated(n_star, spec.h),
        trace=trace,
    )


def max_eps_report(n: int, delta: float, spec: HypothesisSpec) -> BoundReport:
    eps = solve_max_eps(n, delta, spec)
    return BoundReport(
        query=BoundQuery(spec=spec, n=n, delta=delta),
        delta_log=LogNum(math.log(delta)),
        primary="solved_eps",
        solved_eps=eps,
        saturated=is_saturated(n, spec.h),
        vacuous=eps >= 1.0,
    )
