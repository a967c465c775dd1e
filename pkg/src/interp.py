# src/interp.py

"""
Factorial and q-interpolation Schur polynomials.

s_λ(x|a) is evaluated by the tableau sum (reference), the determinant
ratio det[(x_i|a)^{λ_j+N-j}] / Vandermonde (distinct points), or the
branching recursion shared with src/schur.py. The interpolation
polynomial s*_μ(x; p) is the factorial one with a_i = -p^{i-N}; p may be
q or q^{-1}, so these functions take the parameter as a plain rational.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.errors import (
    IndexOutOfRange,
    LevelMismatch,
    MissingGridValue,
    NegativeCoordinate,
    RepeatedPoint,
)
from src.exact import QParam, exact_det
from src.gt import (
    Signature,
    boxes,
    conjugate,
    contains,
    diagram_stats,
    enumerate_partitions,
    iter_tableaux,
    sub_partitions,
)
from src.schur import (
    BranchingEvaluator,
    Direction,
    as_point,
    principal_spec,
    principal_value,
    schur_eval,
)

logger = logging.getLogger(__name__)

Coefficients = Dict[Signature, Fraction]


@dataclass(frozen=True)
class FactorialSequence:
    """A 1-indexed family a_1, a_2, ... given by a generator."""

    generator: Callable[[int], object]
    name: str = "custom"

    def __call__(self, i: int):
        return self.generator(i)

    def shifted(self, j: int) -> "FactorialSequence":
        """τ^j a, with (τ^j a)_i = a_{i+j}."""
        if j == 0:
            return self
        base = self.generator
        return FactorialSequence(lambda i: base(i + j), f"tau^{j}({self.name})")

    @classmethod
    def interpolation(cls, param, level: int) -> "FactorialSequence":
        """a_i = -p^{i-N}."""
        return cls(lambda i: -param ** (i - level), f"interp(p={param},N={level})")

    @classmethod
    def hat(cls, q: QParam) -> "FactorialSequence":
        """â_i = -q^{1-i}."""
        return cls(lambda i: -q.q ** (1 - i), f"hat(q={q})")

    @classmethod
    def zero(cls) -> "FactorialSequence":
        return cls(lambda i: 0, "zero")

    @classmethod
    def from_values(cls, values: Sequence) -> "FactorialSequence":
        values = tuple(values)

        def lookup(i: int):
            if not 1 <= i <= len(values):
                raise IndexOutOfRange(f"factorial sequence has no entry a_{i}", index=i)
            return values[i - 1]

        return cls(lookup, "explicit")


def _require_nonneg(lam: Signature) -> None:
    if not lam.is_nonneg():
        raise NegativeCoordinate(f"{lam} must have nonnegative coordinates", lam=lam)


def _rising(x, a: FactorialSequence, r: int):
    """(x|a)^r = (x + a_1) ... (x + a_r)."""
    value = 1
    for s in range(1, r + 1):
        value = value * (x + a(s))
    return value


def factorial_schur(lam: Signature, x: Sequence, a: FactorialSequence, method: str = "auto"):
    """
    Evaluate s_λ(x|a).

    Args:
        lam: Nonnegative signature of level N
        x: N evaluation points
        a: The factorial sequence
        method: "tableau", "determinant", "branching" or "auto"

    Returns:
        The exact value (complex when x is complex)
    """
    _require_nonneg(lam)
    x = as_point(x)
    if lam.level != len(x):
        raise LevelMismatch(f"level {lam.level} signature at {len(x)} points", lam=lam)
    n = lam.level
    exact = all(isinstance(v, Fraction) for v in x)
    if method == "auto":
        method = "determinant" if exact and len(set(x)) == n else "branching"

    if method == "tableau":
        total = 0
        for t in iter_tableaux(lam, n):
            term = 1
            for i, j, k in t.entries():
                term = term * (x[k - 1] + a(k + j - i))
            total = total + term
        return total

    if method == "determinant":
        if len(set(x)) != n:
            raise RepeatedPoint("determinant route needs distinct points", x=x)
        numerator = exact_det([[_rising(v, a, lam[j] + n - 1 - j) for j in range(n)] for v in x])
        vandermonde = Fraction(1)
        for i, j in itertools.combinations(range(n), 2):
            vandermonde *= x[i] - x[j]
        return numerator / vandermonde

    engine = BranchingEvaluator(x, lambda m, i, j: x[m - 1] + a(m + j - i))
    return engine.value(lam.coords)


def interp_sequence(param, level: int) -> FactorialSequence:
    return FactorialSequence.interpolation(param, level)


def interp_schur(mu: Signature, x: Sequence, param, method: str = "auto"):
    """s*_μ(x; p) = Σ_T ∏ (x_{T(i,j)} - p^{j-i+T(i,j)-N})."""
    return factorial_schur(mu, x, interp_sequence(param, mu.level), method)


def interp_evaluator(x: Sequence, param) -> BranchingEvaluator:
    """Shared-cache evaluator of s*_ρ(x; p) for many ρ at one point."""
    a = interp_sequence(param, len(x))
    x = as_point(x)
    return BranchingEvaluator(x, lambda m, i, j: x[m - 1] + a(m + j - i))


def interp_schur_numeric(mu: Signature, x: Sequence[complex], param: float) -> complex:
    """Double-precision s*_μ(x; p) at complex points."""
    _require_nonneg(mu)
    points = np.asarray(x, dtype=np.complex128)
    n = len(points)
    engine = BranchingEvaluator(
        points, lambda m, i, j: points[m - 1] - param ** (m + j - i - n)
    )
    return complex(engine.value(mu.coords))


def grid_point(lam: Signature, param) -> Tuple:
    """p^{λ-δ} = (p^{λ_1}, p^{λ_2-1}, ..., p^{λ_N-N+1})."""
    return tuple(Fraction(param) ** (c - i) for i, c in enumerate(lam.coords))


def interp_at_grid(mu: Signature, lam: Signature, param) -> Fraction:
    """s*_μ evaluated at the grid point of λ."""
    if mu.level != lam.level:
        raise LevelMismatch("interp_at_grid needs equal levels", mu=mu, lam=lam)
    _require_nonneg(lam)
    return interp_schur(mu, grid_point(lam, param), param)


def interp_diagonal(mu: Signature, param) -> Fraction:
    """s*_μ(p^{μ-δ}; p) = p^{n(μ')-2n(μ)} ∏ (p^{h(i,j)} - 1)."""
    _require_nonneg(mu)
    p = Fraction(param)
    stats = diagram_stats(mu.coords)
    value = p ** (stats.n_conjugate - 2 * stats.n)
    for h in stats.hooks.values():
        value *= p ** h - 1
    return value


def interp_at_zero_param(mu: Signature, level: int, param) -> Fraction:
    """s*_μ(0, ..., 0; p) = s_μ(1, p, ..., p^{N-1}) p^{-(N-1)|μ|} ∏ (-p^{j-i})."""
    _require_nonneg(mu)
    p = Fraction(param)
    mu = mu.padded(level)
    value = principal_value(mu, p) * p ** (-(level - 1) * mu.size)
    for i, j in boxes(mu.partition()):
        value *= -p ** (j - i)
    return value


def interp_at_zero(mu: Signature, level: int, q: QParam) -> Fraction:
    """s*_μ(0; q^{-1}) = s_μ(1, q^{-1}, ..., q^{1-N}) q^{(N-1)|μ|} ∏ (-q^{i-j})."""
    return interp_at_zero_param(mu, level, q.inverse)


# ---------------------------------------------------------------------------
# Binomial formulas

def binomial_expand(lam: Signature, k: int, q: QParam) -> Coefficients:
    """
    Coefficients of s_λ(x_1..x_k) in the basis s*_μ(x; q), μ ⊆ λ.

    coefficient = s*_μ(q^{λ-δ}) / s*_μ(q^{μ-δ}) · s_λ(1..q^{1-k}) / s_μ(1..q^{1-k})
    """
    _require_nonneg(lam)
    lam = lam.padded(k)
    top = principal_spec(lam, q, Direction.DESCENDING)
    coefficients = {}
    for mu in sub_partitions(lam):
        ratio = interp_at_grid(mu, lam, q.q) / interp_diagonal(mu, q.q)
        if ratio:
            coefficients[mu] = ratio * top / principal_spec(mu, q, Direction.DESCENDING)
    return coefficients


def binomial_expand_interp(lam: Signature, k: int, q: QParam) -> Coefficients:
    """
    Coefficients of s*_λ(x; q) in the Schur basis s_μ(x_1..x_k), μ ⊆ λ.

    coefficient = s*_μ(q^{-(λ-δ)}; q^{-1}) / s*_μ(q^{-(μ-δ)}; q^{-1}) · s*_λ(0; q) / s*_μ(0; q)
    """
    _require_nonneg(lam)
    lam = lam.padded(k)
    p = q.inverse
    top = interp_at_zero_param(lam, k, q.q)
    coefficients = {}
    for mu in sub_partitions(lam):
        ratio = interp_at_grid(mu, lam, p) / interp_diagonal(mu, p)
        if ratio:
            coefficients[mu] = ratio * top / interp_at_zero_param(mu, k, q.q)
    return coefficients


def evaluate_interp_expansion(coefficients: Mapping[Signature, Fraction], x: Sequence, param):
    engine = interp_evaluator(x, param)
    return sum((c * engine.value(mu.coords) for mu, c in coefficients.items()), Fraction(0))


def evaluate_schur_expansion(coefficients: Mapping[Signature, Fraction], x: Sequence):
    return sum((c * schur_eval(mu, x) for mu, c in coefficients.items()), Fraction(0))


# ---------------------------------------------------------------------------
# Triangular interpolation solve

def iter_grid_solve(
    value_at: Callable[[Signature], Fraction],
    region: Sequence[Signature],
    param,
) -> Iterator[Tuple[Signature, Fraction]]:
    """
    Forward substitution on the interpolation grid.

    region must be ordered by (|μ|, lex) and closed under containment.
    Yields (μ, a_μ) with F = Σ a_μ s*_μ(·; p), one μ at a time.
    """
    solved: List[Tuple[Signature, Fraction]] = []
    for mu in region:
        point = grid_point(mu, param)
        engine = interp_evaluator(point, param)
        residual = Fraction(value_at(mu))
        for rho, coefficient in solved:
            if coefficient and contains(rho, mu):
                residual -= coefficient * engine.value(rho.coords)
        a_mu = residual / interp_diagonal(mu, param)
        solved.append((mu, a_mu))
        yield mu, a_mu


def grid_triangular_solve(values: Mapping[Signature, Fraction], k: int, param) -> Coefficients:
    """
    Coefficients a_μ of F = Σ a_μ s*_μ(x_1..x_k; p) from F on the grid.

    Args:
        values: F(p^{λ-δ}) for every λ of a containment-closed support
        k: Number of variables
        param: The interpolation parameter p

    Returns:
        Map μ -> a_μ over the support
    """
    for lam in values:
        if lam.level != k:
            raise LevelMismatch(f"grid value at {lam} is not at level {k}", lam=lam)
        for rho in sub_partitions(lam):
            if rho not in values:
                raise MissingGridValue(f"no grid value at {rho} (below {lam})", lam=rho)
    region = sorted(values, key=lambda s: (s.size, s.coords))
    logger.debug("grid solve: %d grid points at level %d, p = %s", len(region), k, param)
    return dict(iter_grid_solve(values.__getitem__, region, param))


# ---------------------------------------------------------------------------
# Factorial elementary polynomials, determinantal and dual Cauchy formulas

def factorial_elementary(k: int, y: Sequence, a: FactorialSequence, shift: int = 0):
    """e_k(y_1..y_m | τ^shift a) = s_{1^k}(y | τ^shift a)."""
    y = as_point(y)
    m = len(y)
    if k < 0 or k > m:
        return 0
    if k == 0:
        return 1
    b = a.shifted(shift)
    # e[t] holds e_t of the current prefix; the new variable sits at the column bottom
    e = [1] + [0] * k
    for r in range(1, m + 1):
        for t in range(min(k, r), 0, -1):
            e[t] = e[t] + (y[r - 1] + b(r + 1 - t)) * e[t - 1]
    return e[k]


def factorial_schur_det_e(lam: Signature, y: Sequence, a: FactorialSequence, m: Optional[int] = None):
    """s_λ(y|a) = det[e_{λ'_i-i+j}(y | τ^{j-1} a)]_{i,j ≤ m}, m ≥ λ_1."""
    _require_nonneg(lam)
    conj = conjugate(lam.coords)
    m = len(conj) if m is None else m
    if m < len(conj):
        raise IndexOutOfRange(f"matrix size {m} is below λ_1 = {len(conj)}")
    conj = conj + (0,) * (m - len(conj))
    rows = [[factorial_elementary(conj[i] - (i + 1) + (j + 1), y, a, shift=j) for j in range(m)]
            for i in range(m)]
    return exact_det(rows)


def complement_conjugate(lam: Signature, m: int) -> Signature:
    """λ̂': the complement of λ' inside the m × N box, as a level-m signature."""
    n = lam.level
    conj = conjugate(lam.coords)
    if len(conj) > m:
        raise IndexOutOfRange(f"{lam} does not fit in {m} columns")
    conj = conj + (0,) * (m - len(conj))
    return Signature(tuple(n - conj[m - 1 - i] for i in range(m)))


def dual_cauchy_terms(x: Sequence, y: Sequence, a: FactorialSequence) -> Fraction:
    """Σ_{λ ⊆ m^N} (-1)^{|λ|} s_λ(x|a) s_{λ̂'}(y|a)."""
    x, y = as_point(x), as_point(y)
    n, m = len(x), len(y)
    total = Fraction(0)
    for lam in enumerate_partitions(n, m):
        term = factorial_schur(lam, x, a, "branching") * factorial_schur(
            complement_conjugate(lam, m), y, a, "branching")
        total += -term if lam.size % 2 else term
    return total


# ---------------------------------------------------------------------------
# The two basis maps on symmetric polynomials

def apply_g(coefficients: Mapping[Signature, Fraction], q: QParam) -> Coefficients:
    """G: s_μ ↦ (-1)^{|μ|} q^{n(μ)-n(μ')} s*_μ(x; q); output in the s* basis."""
    image = {}
    for mu, c in coefficients.items():
        stats = diagram_stats(mu.coords)
        sign = -1 if mu.size % 2 else 1
        image[mu] = c * sign * q.q ** (stats.n - stats.n_conjugate)
    return image


def schur_to_boundary_basis(mu: Signature, k: int, q: QParam) -> Coefficients:
    """
    Expand s_μ(x_1..x_k) in b*_ν(x) = s*_ν(q^{k-1}x; q^{-1}) / s*_ν(0; q^{-1}).
    """
    _require_nonneg(mu)
    mu = mu.padded(k)
    p = q.inverse
    region = enumerate_partitions(k, mu[0], max_size=mu.size)
    scale = q.q ** (1 - k)

    def value_at(nu: Signature) -> Fraction:
        return schur_eval(mu, tuple(scale * v for v in grid_point(nu, p)))

    return {nu: a_nu * interp_at_zero(nu, k, q)
            for nu, a_nu in iter_grid_solve(value_at, region, p) if a_nu}


def apply_g_prime(boundary: Mapping[Signature, Fraction], q: QParam) -> Coefficients:
    """G': b*_ν ↦ s_ν(x) / s_ν(1, q^{-1}, ..., q^{1-k}); output in the Schur basis."""
    return {nu: c / principal_spec(nu, q, Direction.DESCENDING) for nu, c in boundary.items()}


def g_maps_on_schur(mu: Signature, k: int, q: QParam) -> Tuple[Coefficients, Coefficients]:
    """G(s_μ) and G'(s_μ), both in the s*(x; q) basis, zero entries dropped."""
    mu = mu.padded(k)
    left = {m: c for m, c in apply_g({mu: Fraction(1)}, q).items() if c}
    right: Coefficients = {}
    for nu, c in apply_g_prime(schur_to_boundary_basis(mu, k, q), q).items():
        for rho, d in binomial_expand(nu, k, q).items():
            right[rho] = right.get(rho, Fraction(0)) + c * d
    return left, {m: c for m, c in right.items() if c}
