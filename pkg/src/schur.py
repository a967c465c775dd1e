# src/schur.py

"""
Exact evaluation of rational Schur functions.

Two engines: the bialternant (a ratio of determinants, distinct points
only) and the branching recursion over interlacing chains, which also
serves the factorial and interpolation variants in src/interp.py.
"""

import enum
import itertools
from fractions import Fraction
from typing import Callable, Dict, Sequence, Tuple

from src.errors import LevelMismatch, NegativeCoordinate, RepeatedPoint, ZeroPoint
from src.exact import QParam, exact_det, parse_scalar
from src.gt import Signature, boxes, diagram_stats, n_of


BoxFactor = Callable[[int, int, int], object]


class Direction(enum.Enum):
    ASCENDING = "ascending"    # (1, q, ..., q^{N-1})
    DESCENDING = "descending"  # (1, q^{-1}, ..., q^{1-N})


def as_point(x: Sequence) -> Tuple:
    """Coerce strings and ints to Fractions; other numbers pass unchanged."""
    return tuple(parse_scalar(v) if isinstance(v, (str, int)) else v for v in x)


class BranchingEvaluator:
    """
    Memoized branching recursion for a fixed evaluation point.

    value(λ) sums over μ ≺ λ the value at μ in one variable fewer, times
    the product of box_factor(n, i, j) over the boxes (i, j) of λ/μ, where
    n is the number of variables in play. The cache is keyed by the
    coordinate tuple and lives as long as the evaluator.
    """

    def __init__(self, x: Sequence, box_factor: BoxFactor):
        self.x = tuple(x)
        self.box_factor = box_factor
        self.cache: Dict[Tuple[int, ...], object] = {}

    def value(self, coords: Tuple[int, ...]):
        n = len(coords)
        if n == 0:
            return 1
        cached = self.cache.get(coords)
        if cached is not None:
            return cached
        total = 0
        ranges = [range(coords[i + 1], coords[i] + 1) for i in range(n - 1)]
        for mu in itertools.product(*ranges):
            term = self.value(mu)
            if term == 0:
                continue
            for i in range(1, n + 1):
                start = mu[i - 1] if i <= n - 1 else 0
                for j in range(start + 1, coords[i - 1] + 1):
                    term = term * self.box_factor(n, i, j)
            total = total + term
        self.cache[coords] = total
        return total


def _check_level(lam: Signature, x: Sequence) -> None:
    if lam.level != len(x):
        raise LevelMismatch(f"signature of level {lam.level} evaluated at {len(x)} points",
                            lam=lam)


def _shift_to_nonneg(lam: Signature, x: Sequence):
    """Return (λ - λ_N, (x_1⋯x_N)^{λ_N}) when λ_N < 0, else (λ, 1)."""
    low = lam[-1]
    if low >= 0:
        return lam, 1
    if any(v == 0 for v in x):
        raise ZeroPoint(f"{lam} has negative coordinates and the point has a zero", lam=lam)
    scale = 1
    for v in x:
        scale = scale * v
    return Signature(tuple(c - low for c in lam.coords)), scale ** low


def schur_bialternant(lam: Signature, x: Sequence) -> Fraction:
    """
    s_λ = det[x_i^{λ_j+N-j}] / det[x_i^{N-j}] at pairwise distinct points.

    Args:
        lam: Signature of level N
        x: N rational points

    Returns:
        The exact value
    """
    x = as_point(x)
    _check_level(lam, x)
    n = lam.level
    if len(set(x)) != n:
        raise RepeatedPoint("bialternant needs distinct points; use schur_branching_dp", x=x)
    exponents = [lam[j] + n - 1 - j for j in range(n)]
    if min(exponents) < 0 and any(v == 0 for v in x):
        raise ZeroPoint(f"negative exponent for {lam} at a zero point", lam=lam)
    numerator = exact_det([[Fraction(v) ** e for e in exponents] for v in x])
    vandermonde = Fraction(1)
    for i, j in itertools.combinations(range(n), 2):
        vandermonde *= x[i] - x[j]
    return numerator / vandermonde


def schur_branching_dp(lam: Signature, x: Sequence):
    """s_λ via s_λ(x_1..x_N) = Σ_{μ≺λ} s_μ(x_1..x_{N-1}) x_N^{|λ|-|μ|}."""
    x = as_point(x)
    _check_level(lam, x)
    base, scale = _shift_to_nonneg(lam, x)
    engine = BranchingEvaluator(x, lambda n, i, j: x[n - 1])
    return scale * engine.value(base.coords)


def schur_eval(lam: Signature, x: Sequence):
    """Dispatch: bialternant for distinct rational points, branching otherwise."""
    x = as_point(x)
    exact = all(isinstance(v, Fraction) for v in x)
    if exact and len(set(x)) == len(x) and (lam[-1] >= 0 or all(v != 0 for v in x)):
        return schur_bialternant(lam, x)
    return schur_branching_dp(lam, x)


def principal_value(lam: Signature, base: Fraction) -> Fraction:
    """s_λ(1, b, ..., b^{N-1}) by the product formula; any rational b ≠ 0, 1."""
    n = lam.level
    value = Fraction(base) ** n_of(lam.coords)
    for i, j in itertools.combinations(range(n), 2):
        value *= (1 - base ** (lam[i] - lam[j] + j - i)) / (1 - base ** (j - i))
    return value


def principal_spec(lam: Signature, q: QParam, direction: Direction = Direction.ASCENDING) -> Fraction:
    """
    Principal specialization by the product formula.

    ascending:  s_λ(1, q, ..., q^{N-1}) = q^{n(λ)} ∏_{i<j} (1-q^{λ_i-λ_j+j-i})/(1-q^{j-i})
    descending: s_λ(1, q^{-1}, ..., q^{1-N}) = q^{-(N-1)|λ|} · ascending
    """
    value = principal_value(lam, q.q)
    if direction is Direction.DESCENDING:
        value *= q.q ** (-(lam.level - 1) * lam.size)
    return value


def principal_point(n: int, q: QParam, direction: Direction = Direction.ASCENDING) -> Tuple[Fraction, ...]:
    step = q.q if direction is Direction.ASCENDING else q.inverse
    return tuple(step ** i for i in range(n))


def dim_q(lam: Signature, q: QParam) -> Fraction:
    """Dim_q(λ) = s_λ(1, q, ..., q^{N-1})."""
    return principal_spec(lam, q, Direction.ASCENDING)


def hook_content_limit(mu: Signature, q: QParam) -> Fraction:
    """lim_N s_μ(1, q, ..., q^N) = q^{n(μ)} / ∏ (1 - q^{h(i,j)})."""
    if not mu.is_nonneg():
        raise NegativeCoordinate(f"{mu} has negative coordinates", mu=mu)
    stats = diagram_stats(mu.coords)
    value = q.q ** stats.n
    for i, j in boxes(mu.partition()):
        value /= 1 - q.q ** stats.hooks[(i, j)]
    return value
