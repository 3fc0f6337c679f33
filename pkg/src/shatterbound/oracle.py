"""Brute-force dichotomy counting on exact rational point sets.

Independent check of the counting formula: generate n points in general
position in dimension h, enumerate label vectors in {-1,+1}^n, and decide
for each one whether some affine hyperplane strictly separates the classes.
Separability is settled by an exact-rational LP, so "margin zero" versus
"margin positive" is never a floating-point judgement call. The resulting
count is compared against 2 * sum_{i<=h} C(n-1, i).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .logarithmetic import BigCount
from .rational_lp import OPTIMAL, simplex_max
from .shattering import shatter_single

__all__ = [
    "PointSet",
    "Dichotomy",
    "SeparabilityCertificate",
    "GeneralPositionError",
    "VerifyTrial",
    "VerifyReport",
    "PRNG_ID",
    "COORD_RANGE",
    "MAX_RESAMPLES",
    "MAX_ENUM_POINTS",
    "generate_general_position",
    "is_separable",
    "count_dichotomies",
    "verify_formula",
]

PRNG_ID = "python-random-mt19937"
COORD_RANGE = 1000
MAX_RESAMPLES = 100
MAX_ENUM_POINTS = 20

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GeneralPositionError(RuntimeError):
    """Could not draw a general-position configuration within the retry budget."""


def _lifted_full_rank(points) -> bool:
    """Exact test that the vectors (x, 1) of the given points are independent.

    Gaussian elimination over Fractions; m points in dimension h need
    m <= h + 1 to possibly pass.
    """
    rows = [list(p) + [_ONE] for p in points]
    m = len(rows)
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = _ONE / prow[c]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f != 0:
                f *= inv
                rows[i] = [v - f * pv for v, pv in zip(rows[i], prow)]
        r += 1
        if r == m:
            return True
    return r == m


def _in_general_position(points, dim) -> bool:
    if len(set(points)) != len(points):
        return False
    m = min(dim + 1, len(points))
    return all(
        _lifted_full_rank(subset)
        for subset in itertools.combinations(points, m)
    )


@dataclass(frozen=True)
class PointSet:
    """n points with exact rational coordinates in general position.

    General position: every subset of min(dim + 1, n) points is affinely
    independent, verified exactly at construction. ``seed`` and
    ``resamples`` record generation provenance when applicable.
    """

    dim: int
    points: tuple[tuple[Fraction, ...], ...]
    seed: int | None = None
    resamples: int = 0

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("point set must be nonempty")
        if any(len(p) != self.dim for p in pts):
            raise ValueError("all points must have exactly dim coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        if not _in_general_position(pts, self.dim):
            raise ValueError("points are not in general position")

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Dichotomy:
    """A +/-1 label per point."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(l not in (-1, 1) for l in self.labels):
            raise ValueError("labels must be -1 or +1")

    def negate(self) -> "Dichotomy":
        return Dichotomy(tuple(-l for l in self.labels))


@dataclass(frozen=True)
class SeparabilityCertificate:
    """Explicit witness (w, b) with labels[i] * (w . x_i + b) >= margin > 0."""

    w: tuple[Fraction, ...]
    b: Fraction
    margin: Fraction

    def side(self, point) -> Fraction:
        return sum((wi * xi for wi, xi in zip(self.w, point)), _ZERO) + self.b


def generate_general_position(n: int, h: int, seed: int) -> PointSet:
    """Deterministic general-position sample: integer coordinates uniform on
    [-1000, 1000], whole set redrawn until the exact position check passes.

    Whole-set resampling keeps the draw a pure function of (n, h, seed); the
    Mersenne Twister behind ``random.Random`` is stable across platforms.
    """
    if n < 1:
        raise ValueError(f"need at least one point, got n={n}")
    if not 1 <= h <= 4:
        raise ValueError(f"generation supports 1 <= h <= 4, got h={h}")
    rng = random.Random(seed)
    for attempt in range(MAX_RESAMPLES + 1):
        pts = tuple(
            tuple(Fraction(rng.randint(-COORD_RANGE, COORD_RANGE)) for _ in range(h))
            for _ in range(n)
        )
        if _in_general_position(pts, h):
            return PointSet(dim=h, points=pts, seed=seed, resamples=attempt)
    raise GeneralPositionError(
        f"no general-position set of n={n}, h={h} after {MAX_RESAMPLES} resamples "
        f"(seed={seed})"
    )


def _margin_lp(points, labels):
    """Exact max-margin program under the box |w_j| <= 1, |b| <= 1.

        maximize t   s.t.   labels[i] * (w . x_i + b) >= t  for every i

    Any separating hyperplane can be rescaled into the box with its margin
    still positive, so the sign of the optimum decides strict separability.
    Splitting w and b into nonnegative parts and restricting t >= 0 (the
    optimum is then max(t*, 0), same decision and same witness when
    separable) makes the all-slack basis feasible: every right-hand side is
    nonnegative, so the solve needs no feasibility phase.
    """
    h = len(points[0])
    nx = 2 * h + 3  # w+, w-, b+, b-, t
    c = [_ZERO] * (2 * h + 2) + [_ONE]
    A = []
    rhs = []
    for j in range(2 * h + 2):  # each split part capped at 1
        row = [_ZERO] * nx
        row[j] = _ONE
        A.append(row)
        rhs.append(_ONE)
    for pt, lab in zip(points, labels):
        row = (
            [-lab * x for x in pt]
            + [lab * x for x in pt]
            + [Fraction(-lab), Fraction(lab), _ONE]
        )
        A.append(row)
        rhs.append(_ZERO)
    res = simplex_max(c, A, rhs)
    assert res.status == OPTIMAL, "margin program is feasible and box-bounded"
    x = res.x
    w = tuple(x[j] - x[h + j] for j in range(h))
    b = x[2 * h] - x[2 * h + 1]
    return res.objective, w, b


def is_separable(ps: PointSet, d: Dichotomy) -> SeparabilityCertificate | None:
    """Certificate for a strictly separating hyperplane, or None.

    The certificate is re-validated against every point before being
    returned, so a caller can trust it without reproving anything.
    """
    if len(d.labels) != len(ps):
        raise ValueError(
            f"dichotomy has {len(d.labels)} labels for {len(ps)} points"
        )
    t, w, b = _margin_lp(ps.points, d.labels)
    if t <= 0:
        return None
    cert = SeparabilityCertificate(w=w, b=b, margin=t)
    for pt, lab in zip(ps.points, d.labels):
        assert lab * cert.side(pt) >= cert.margin
    return cert


def _strictly_separates(w, b, point, label) -> bool:
    s = sum((wi * xi for wi, xi in zip(w, point)), _ZERO) + b
    return label * s > 0


def _extend_count(points, labels, wb):
    """Count separable completions of a separable prefix.

    The prefix invariant makes pruning sound: a labeling whose prefix is
    not separable has no separable extension. The cached hyperplane (w, b)
    settles most extensions without touching the LP; only points landing on
    the wrong side (or exactly on the plane) trigger a re-solve.
    """
    n = len(points)
    k = len(labels)
    if k == n:
        return 1
    nxt = points[k]
    total = 0
    for lab in (1, -1):
        labels.append(lab)
        if _strictly_separates(wb[0], wb[1], nxt, lab):
            total += _extend_count(points, labels, wb)
        else:
            t, w, b = _margin_lp(points[: k + 1], labels)
            if t > 0:
                total += _extend_count(points, labels, (w, b))
        labels.pop()
    return total


def _count_under_prefix(points, prefix):
    """Separable full labelings extending ``prefix`` (0 if the prefix is not)."""
    t, w, b = _margin_lp(points[: len(prefix)], list(prefix))
    if t <= 0:
        return 0
    return _extend_count(points, list(prefix), (w, b))


def _chunk_job(args):
    points, prefix = args
    return _count_under_prefix(points, prefix)


def count_dichotomies(ps: PointSet, workers: int = 1) -> BigCount:
    """Number of labelings of ps admitting a separating hyperplane.

    Exploits label negation (d separable iff -d separable, via
    (w, b) -> (-w, -b)): only labelings with labels[0] = +1 are enumerated
    and the count is doubled. The total is a sum over disjoint label
    prefixes, so the result is independent of enumeration order and of how
    the prefixes are dealt out to workers.
    """
    n = len(ps)
    if n > MAX_ENUM_POINTS:
        raise ValueError(
            f"enumeration guard: n={n} exceeds {MAX_ENUM_POINTS} points "
            f"(2^n labelings is past desk scale)"
        )
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")

    if workers == 1 or n < 4:
        return 2 * _count_under_prefix(ps.points, (1,))

    # split on the labels of the first few free points: enough chunks to
    # keep every worker busy, each chunk a disjoint prefix subtree
    depth = 1 + min(n - 1, max(1, (2 * workers - 1).bit_length()))
    prefixes = [
        (1,) + combo for combo in itertools.product((1, -1), repeat=depth - 1)
    ]
    jobs = [(ps.points, pref) for pref in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        partials = list(ex.map(_chunk_job, jobs))
    return 2 * sum(partials)


@dataclass(frozen=True)
class VerifyTrial:
    seed: int
    resamples: int
    count: BigCount


@dataclass(frozen=True)
class VerifyReport:
    """Per-trial oracle counts against the formula value."""

    n: int
    h: int
    trials: int
    seed: int
    prng: str
    formula_count: BigCount
    results: tuple[VerifyTrial, ...]
    passed: bool


def verify_formula(
    n: int, h: int, trials: int, seed: int, workers: int = 1
) -> VerifyReport:
    """Draw ``trials`` fresh general-position sets and count dichotomies on each.

    PASS means every trial matched 2 * sum_{i<=h} C(n-1, i) exactly. Trial
    seeds are derived from the master seed so runs are reproducible while
    trials stay independent draws.
    """
    if n > MAX_ENUM_POINTS:
        raise ValueError(f"size guard: n={n} exceeds {MAX_ENUM_POINTS}")
    if not 1 <= h <= 4:
        raise ValueError(f"size guard: h={h} outside 1..4")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    master = random.Random(seed)
    trial_seeds = [master.randrange(2**32) for _ in range(trials)]
    expected = shatter_single(n, h)
    results = []
    for ts in trial_seeds:
        ps = generate_general_position(n, h, ts)
        cnt = count_dichotomies(ps, workers=workers)
        results.append(VerifyTrial(seed=ts, resamples=ps.resamples, count=cnt))
    return VerifyReport(
        n=n,
        h=h,
        trials=trials,
        seed=seed,
        prng=PRNG_ID,
        formula_count=expected,
        results=tuple(results),
        passed=all(t.count == expected for t in results),
    )
