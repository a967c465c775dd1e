# src/exact.py

"""
Exact rational arithmetic and q-product helpers.

Scalars are fractions.Fraction everywhere; determinants go through sympy's
DomainMatrix over QQ so that nothing is ever rounded.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.errors import DegenerateEnclosure, InvalidQ, ParseError


ExactScalar = Fraction
Number = Union[int, Fraction]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_scalar(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse a rational from "p/q", an integer, or a finite decimal string.

    Args:
        text: The value to parse; Fractions and ints pass straight through

    Returns:
        The value as a reduced Fraction
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _SCALAR_RE.match(text)
    if match:
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise ParseError(f"zero denominator in {text!r}", value=text)
        return Fraction(int(numerator), int(denominator or 1))
    try:
        # Fraction parses decimal strings like "0.25" exactly
        return Fraction(text.strip())
    except ValueError:
        raise ParseError(f"not a rational number: {text!r}", value=text) from None


@dataclass(frozen=True)
class QParam:
    """The deformation parameter, a rational strictly between 0 and 1."""

    q: Fraction

    def __post_init__(self):
        value = parse_scalar(self.q)
        if not 0 < value < 1:
            raise InvalidQ(f"q must satisfy 0 < q < 1, got {value}", q=value)
        object.__setattr__(self, "q", value)

    @property
    def inverse(self) -> Fraction:
        return 1 / self.q

    def pow(self, k: int) -> Fraction:
        return self.q ** k

    def __str__(self) -> str:
        return str(self.q)


def q_pow(q: QParam, k: int) -> Fraction:
    """q^k for any signed integer k."""
    return q.q ** k


def q_factor_product(q: QParam, n: int) -> Fraction:
    """(1-q)(1-q^2)...(1-q^n); the empty product is 1."""
    result = Fraction(1)
    for i in range(1, n + 1):
        result *= 1 - q.q ** i
    return result


def euler_product_enclosure(q: QParam, n: int) -> Tuple[Fraction, Fraction]:
    """
    Enclose the infinite product of (1 - q^i), i >= 1.

    The upper end is the first n factors; the lower end multiplies it by
    1 - sum_{i>n} q^i = 1 - q^{n+1}/(1-q).

    Args:
        q: Deformation parameter
        n: Number of explicit factors

    Returns:
        (lower, upper) with lower <= product <= upper
    """
    tail = q.q ** (n + 1) / (1 - q.q)
    if tail >= 1:
        raise DegenerateEnclosure(
            f"tail bound q^(n+1)/(1-q) = {tail} >= 1; increase n",
            q=q.q, n=n,
        )
    upper = q_factor_product(q, n)
    return upper * (1 - tail), upper


def exact_det(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant of a square rational matrix, computed over QQ."""
    size = len(rows)
    if size == 0:
        return Fraction(1)
    entries = []
    for row in rows:
        if len(row) != size:
            raise ValueError("exact_det needs a square matrix")
        entries.append([QQ(int(Fraction(v).numerator), int(Fraction(v).denominator)) for v in row])
    value = DomainMatrix(entries, (size, size), QQ).det()
    return Fraction(int(value.numerator), int(value.denominator))
