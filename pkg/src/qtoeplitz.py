# src/qtoeplitz.py

"""
q-Toeplitz matrices.

A matrix d[i, j] (i, j ≥ 1) is q-Toeplitz when
d[i, j+1] = d[i-1, j] + (q^{1-j} - q^{1-i}) d[i, j], with d = 0 off the
positive quadrant; the first column determines everything. The first
column used here is the Newton-type expansion of a polynomial H,
H(t) = Σ c_ℓ ∏_{i<ℓ} (q^{-i} - t).
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import IndexOutOfRange, ZeroPoint
from src.exact import QParam, exact_det, parse_scalar
from src.gt import Signature, enumerate_partitions
from src.interp import FactorialSequence, factorial_elementary, grid_point, iter_grid_solve
from src.measures import NuSeq, h_nu

logger = logging.getLogger(__name__)


def _trim(poly: Sequence) -> Tuple[Fraction, ...]:
    coefficients = [parse_scalar(c) for c in poly] or [Fraction(0)]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def _evaluate(poly: Sequence[Fraction], t):
    value = 0
    for c in reversed(poly):
        value = value * t + c
    return value


@dataclass(frozen=True)
class NewtonExpansion:
    """H(t) = Σ_ℓ c_ℓ ∏_{i=0}^{ℓ-1} (q^{-i} - t)."""

    q: QParam
    coefficients: Tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        total, basis = 0, 1
        for ell, c in enumerate(self.coefficients):
            total = total + c * basis
            basis = basis * (self.q.q ** (-ell) - t)
        return total

    def normalization(self) -> Fraction:
        """Σ c_ℓ q^{-ℓ(ℓ-1)/2}; equal to 1 for expansions of H^ν."""
        return sum((c * self.q.q ** (-(ell * (ell - 1) // 2))
                    for ell, c in enumerate(self.coefficients)), Fraction(0))


@dataclass(frozen=True)
class QToeplitz:
    q: QParam
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i: int, j: int) -> Fraction:
        """d[i, j], 1-based; zero when i < 1 or j < 1."""
        if i < 1 or j < 1:
            return Fraction(0)
        if i > self.rows or j > self.cols:
            raise IndexOutOfRange(f"d[{i},{j}] is outside the {self.rows}x{self.cols} rectangle",
                                  i=i, j=j)
        return self.entries[i - 1][j - 1]

    def first_column(self) -> Tuple[Fraction, ...]:
        return tuple(row[0] for row in self.entries)

    def check_recurrence(self) -> bool:
        q = self.q.q
        for j in range(1, self.cols):
            for i in range(1, self.rows + 1):
                expected = self.entry(i - 1, j) + (q ** (1 - j) - q ** (1 - i)) * self.entry(i, j)
                if self.entry(i, j + 1) != expected:
                    return False
        return True


def newton_expand_1d(poly: Sequence, q: QParam) -> NewtonExpansion:
    """
    Newton-type coefficients of a polynomial H at the nodes t = q^{-ℓ}.

    In one variable s*_ℓ(t; q^{-1}) = (-1)^ℓ ∏_{i<ℓ} (q^{-i} - t), so the
    grid solve with p = q^{-1} returns a_ℓ and c_ℓ = (-1)^ℓ a_ℓ.
    """
    poly = _trim(poly)
    region = [Signature((ell,)) for ell in range(len(poly))]
    p = q.inverse
    solved = iter_grid_solve(lambda sig: _evaluate(poly, grid_point(sig, p)[0]), region, p)
    coefficients = tuple(-a if sig[0] % 2 else a for sig, a in solved)
    return NewtonExpansion(q, coefficients)


def newton_to_polynomial(expansion: NewtonExpansion) -> Tuple[Fraction, ...]:
    """Monomial coefficients of Σ c_ℓ ∏ (q^{-i} - t), lowest degree first."""
    result = [Fraction(0)]
    basis = [Fraction(1)]
    for ell, c in enumerate(expansion.coefficients):
        result = [a + c * b for a, b in itertools.zip_longest(result, basis, fillvalue=Fraction(0))]
        node = expansion.q.q ** (-ell)
        basis = [node * a - b for a, b in zip(basis + [Fraction(0)], [Fraction(0)] + basis)]
    return _trim(result)


def polynomial_from_roots(roots: Sequence) -> Tuple[Fraction, ...]:
    """H(t) = ∏ (1 - t / y_ℓ)."""
    poly = [Fraction(1)]
    for y in roots:
        y = parse_scalar(y)
        if y == 0:
            raise ZeroPoint("H(0) = 1 needs nonzero roots")
        poly = [a - b / y for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return tuple(poly)


def from_first_column(expansion: NewtonExpansion, rows: int, cols: int) -> QToeplitz:
    """Fill a rows × cols rectangle from d[i, 1] = c_{i-1} by the recurrence."""
    if rows < 1 or cols < 1:
        raise IndexOutOfRange(f"empty rectangle {rows}x{cols}")
    q = expansion.q.q
    c = expansion.coefficients
    d = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        d[i][0] = c[i] if i < len(c) else Fraction(0)
    for j in range(1, cols):
        # column j+1 (1-based) from column j
        for i in range(1, rows + 1):
            above = d[i - 2][j - 1] if i > 1 else Fraction(0)
            d[i - 1][j] = above + (q ** (1 - j) - q ** (1 - i)) * d[i - 1][j - 1]
    return QToeplitz(expansion.q, tuple(tuple(row) for row in d))


def initial_minor(m: QToeplitz, row_indices: Sequence[int]) -> Fraction:
    """det of the chosen rows against the first len(row_indices) columns."""
    rows = tuple(row_indices)
    size = len(rows)
    if any(rows[i] >= rows[i + 1] for i in range(size - 1)):
        raise IndexOutOfRange(f"row indices must strictly increase: {rows}")
    if size > m.cols or (rows and (rows[0] < 1 or rows[-1] > m.rows)):
        raise IndexOutOfRange(f"rows {rows} do not fit the {m.rows}x{m.cols} rectangle")
    return exact_det([[m.entry(i, j) for j in range(1, size + 1)] for i in rows])


def initial_minors(m: QToeplitz, max_size: int, max_row: Optional[int] = None) -> Dict[Tuple[int, ...], Fraction]:
    """Every initial minor with at most max_size rows drawn from 1..max_row."""
    max_row = m.rows if max_row is None else min(max_row, m.rows)
    minors = {}
    for size in range(1, min(max_size, m.cols) + 1):
        for rows in itertools.combinations(range(1, max_row + 1), size):
            minors[rows] = initial_minor(m, rows)
    return minors


@lru_cache(maxsize=64)
def _c_lambda_table(poly: Tuple[Fraction, ...], level: int, q: QParam) -> Dict[Signature, Fraction]:
    """c_λ for every λ ⊆ m^N by the grid solve of ∏ H(q^{1-N} y_i)."""
    p = q.inverse
    scale = q.q ** (1 - level)

    def value_at(mu: Signature) -> Fraction:
        value = Fraction(1)
        for y in grid_point(mu, p):
            value *= _evaluate(poly, scale * y)
        return value

    region = enumerate_partitions(level, len(poly) - 1)
    table = {mu: (-a if mu.size % 2 else a) for mu, a in iter_grid_solve(value_at, region, p)}
    logger.debug("c_λ table: level %d, degree %d, %d entries", level, len(poly) - 1, len(table))
    return table


def c_lambda(poly: Sequence, lam: Signature, q: QParam) -> Fraction:
    """
    Coefficient of (-1)^{|λ|} s*_λ(q^{N-1}x; q^{-1}) in H(x_1)⋯H(x_N).

    Zero unless λ_1 ≤ deg H.
    """
    poly = _trim(poly)
    if not lam.is_nonneg() or lam[0] > len(poly) - 1:
        return Fraction(0)
    return _c_lambda_table(poly, lam.level, q)[lam]


def minor_rows(lam: Signature) -> Tuple[int, ...]:
    """(λ_N + 1, λ_{N-1} + 2, ..., λ_1 + N)."""
    n = lam.level
    return tuple(lam[n - i] + i for i in range(1, n + 1))


def c_lambda_minor(poly: Sequence, lam: Signature, q: QParam) -> Fraction:
    """q^{-(N-1)|λ|} det[d[λ_{N-i+1} + i, j]] for the matrix built from H."""
    poly = _trim(poly)
    n = lam.level
    expansion = newton_expand_1d(poly, q)
    matrix = from_first_column(expansion, max(expansion.degree, lam[0]) + n, n)
    return q.q ** (-(n - 1) * lam.size) * initial_minor(matrix, minor_rows(lam))


def d_nu(nu: NuSeq, rows: int, cols: int, q: QParam) -> QToeplitz:
    """The q-Toeplitz matrix whose first column is the Newton expansion of H^ν."""
    return from_first_column(newton_expand_1d(h_nu(nu, q).poly, q), rows, cols)


def root_product_entry(roots: Sequence, i: int, j: int, q: QParam) -> Fraction:
    """e_{m-i+j}(y_1..y_m | τ^{j-1} â) with â_k = -q^{1-k}."""
    return factorial_elementary(len(roots) - i + j, roots, FactorialSequence.hat(q), shift=j - 1)


def nonnegative_minor_violations(m: QToeplitz, max_size: int, max_row: Optional[int] = None) -> List[Tuple[int, ...]]:
    return [rows for rows, value in initial_minors(m, max_size, max_row).items() if value < 0]
