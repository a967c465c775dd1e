# src/measures.py

"""
Coherent systems on the q-Gelfand-Tsetlin graph.

Covers the cotransition kernel and its pushdown, primitive systems, the
boundary parameter ν with its generating polynomial H^ν and
specialization Spec_ν, exact projections E^ν_k of extreme measures, the
two generating functions, and the prelimit/limit coefficients.

Only eventually constant ν are handled, which keeps X(ν) finite and H^ν
a polynomial; every computation here is exact except q_k_nu_truncated.
"""

import enum
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config_loader import load_qgt_config
from src.errors import (
    CapTooSmall,
    InvalidMeasure,
    LevelMismatch,
    LevelOutOfRange,
    NegativeCoordinate,
    NegativeMass,
    NegativeNu,
    ParseError,
    SupportViolation,
)
from src.exact import QParam, exact_det, parse_scalar
from src.gt import (
    Signature,
    contains,
    diagram_stats,
    dominates,
    enumerate_below,
    enumerate_partitions,
    interlaces,
    shift,
)
from src.interp import (
    grid_point,
    interp_at_zero,
    interp_diagonal,
    interp_evaluator,
    interp_schur,
    interp_schur_numeric,
    iter_grid_solve,
)
from src.schur import Direction, dim_q, principal_spec, schur_eval

logger = logging.getLogger(__name__)

config = load_qgt_config()
DEFAULT_EPSILON = parse_scalar(config["extreme_settings"]["epsilon"])
DEFAULT_CAP = int(config["extreme_settings"]["cap"])


@dataclass(frozen=True)
class FiniteMeasure:
    """Exact masses at one level plus the unassigned tail; Σ mass + tail = 1."""

    level: int
    masses: Dict[Signature, Fraction] = field(default_factory=dict, hash=False)
    tail: Fraction = Fraction(0)

    def __post_init__(self):
        masses = {sig: Fraction(m) for sig, m in self.masses.items()}
        for sig, m in masses.items():
            if sig.level != self.level:
                raise LevelMismatch(f"{sig} is not at level {self.level}", sig=sig)
            if m < 0:
                raise NegativeMass(f"mass {m} at {sig}", sig=sig, mass=m)
        tail = Fraction(self.tail)
        if tail < 0:
            raise InvalidMeasure(f"negative tail {tail}")
        total = sum(masses.values(), Fraction(0))
        if total + tail != 1:
            raise InvalidMeasure(f"masses sum to {total} with tail {tail}", total=total, tail=tail)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def delta(cls, sig: Signature) -> "FiniteMeasure":
        return cls(sig.level, {sig: Fraction(1)})

    def mass(self, sig: Signature) -> Fraction:
        return self.masses.get(sig, Fraction(0))

    def support(self) -> List[Signature]:
        return sorted(sig for sig, m in self.masses.items() if m)

    def items(self) -> List[Tuple[Signature, Fraction]]:
        return [(sig, self.masses[sig]) for sig in self.support()]


@dataclass(frozen=True)
class NuSeq:
    """
    Nondecreasing ν = (ν_1, ..., ν_J, c, c, ...).

    Trailing prefix entries equal to the tail are dropped, so equal
    sequences compare equal.
    """

    prefix: Tuple[int, ...]
    tail: int

    def __post_init__(self):
        prefix = tuple(int(v) for v in self.prefix)
        tail = int(self.tail)
        values = prefix + (tail,)
        if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
            raise ParseError(f"ν must be nondecreasing: {prefix} then {tail}")
        while prefix and prefix[-1] == tail:
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @classmethod
    def parse(cls, text: str) -> "NuSeq":
        """"0 1;3" -> prefix (0, 1), tail 3; a missing tail repeats the last entry."""
        head, sep, rest = text.partition(";")
        try:
            prefix = tuple(int(v) for v in re.split(r"[\s,]+", head.strip()) if v)
            if sep and rest.strip():
                tail = int(rest.strip())
            elif prefix:
                tail = prefix[-1]
            else:
                raise ParseError(f"ν needs a prefix or a tail: {text!r}")
        except ValueError:
            raise ParseError(f"malformed ν: {text!r}") from None
        return cls(prefix, tail)

    @property
    def length(self) -> int:
        return len(self.prefix)

    def value(self, j: int) -> int:
        """ν_j, 1-based."""
        return self.prefix[j - 1] if j <= len(self.prefix) else self.tail

    def first(self, k: int) -> Tuple[int, ...]:
        return tuple(self.value(j) for j in range(1, k + 1))

    def reversed_signature(self, k: int) -> Signature:
        """(ν_k, ..., ν_1), the lowest point of the support of E^ν_k."""
        return Signature(tuple(reversed(self.first(k))))

    def shift(self, l: int) -> "NuSeq":
        return NuSeq(tuple(v + l for v in self.prefix), self.tail + l)

    def dominated_by(self, other: "NuSeq") -> bool:
        """ν ≤ ν' coordinate-wise over the whole sequence."""
        horizon = max(self.length, other.length) + 1
        return all(self.value(j) <= other.value(j) for j in range(1, horizon + 1))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.prefix) + f";{self.tail}"


@dataclass(frozen=True)
class HNu:
    x_set: Tuple[int, ...]
    poly: Tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def __call__(self, t):
        value = 0
        for c in reversed(self.poly):
            value = value * t + c
        return value


def _require_nonneg_nu(nu: NuSeq) -> None:
    if nu.value(1) < 0:
        raise NegativeNu(f"ν_1 = {nu.value(1)} < 0; shift ν by {-nu.value(1)} first", nu=nu)


# ---------------------------------------------------------------------------
# Cotransition kernel and coherent systems

def cotransition(lam: Signature, mu: Signature, q: QParam) -> Fraction:
    """P(λ → μ) = q^{|μ|} Dim_q(μ) / Dim_q(λ) for μ ≺ λ, else 0."""
    if not interlaces(mu, lam):
        return Fraction(0)
    return q.q ** mu.size * dim_q(mu, q) / dim_q(lam, q)


@lru_cache(maxsize=4096)
def cotransition_row(lam: Signature, q: QParam) -> Tuple[Tuple[Signature, Fraction], ...]:
    """The distribution P(λ → ·) over enumerate_below(λ)."""
    return tuple((mu, cotransition(lam, mu, q)) for mu in enumerate_below(lam))


def pushdown(m: FiniteMeasure, q: QParam) -> FiniteMeasure:
    """P_{N-1}(μ) = Σ_λ P_N(λ) P(λ → μ); the tail is carried unchanged."""
    if m.level < 2:
        raise LevelMismatch("cannot push a level-1 measure down")
    image: Dict[Signature, Fraction] = {}
    for lam, weight in m.items():
        for mu, p in cotransition_row(lam, q):
            if p:
                image[mu] = image.get(mu, Fraction(0)) + weight * p
    return FiniteMeasure(m.level - 1, image, m.tail)


def primitive_system(lam: Signature, k: int, q: QParam) -> FiniteMeasure:
    """P_k^λ: the delta at λ pushed down to level k."""
    if not 1 <= k <= lam.level:
        raise LevelOutOfRange(f"level {k} is outside 1..{lam.level}", k=k)
    measure = FiniteMeasure.delta(lam)
    while measure.level > k:
        measure = pushdown(measure, q)
    return measure


def primitive_first_closed_form(lam: Signature, q: QParam) -> Fraction:
    """P_1^λ(λ_N) = ∏_{i<N} (1 - q^{N-i}) / (1 - q^{λ_i - λ_N - i + N})."""
    n = lam.level
    value = Fraction(1)
    for i in range(1, n):
        value *= (1 - q.q ** (n - i)) / (1 - q.q ** (lam[i - 1] - lam[n - 1] - i + n))
    return value


def shift_measure(m: FiniteMeasure, l: int) -> FiniteMeasure:
    """A_ℓ applied mass by mass."""
    return FiniteMeasure(m.level, {shift(sig, l): w for sig, w in m.masses.items()}, m.tail)


def coherence_check(m_high: FiniteMeasure, m_low: FiniteMeasure, q: QParam) -> Fraction:
    """Total-variation distance between the pushdown of m_high and m_low."""
    if m_high.level != m_low.level + 1:
        raise LevelMismatch(f"levels {m_high.level} and {m_low.level} are not adjacent")
    pushed = pushdown(m_high, q)
    keys = set(pushed.masses) | set(m_low.masses)
    return sum((abs(pushed.mass(s) - m_low.mass(s)) for s in keys), Fraction(0)) / 2


# ---------------------------------------------------------------------------
# The boundary parameter

def h_nu(nu: NuSeq, q: QParam) -> HNu:
    """
    H^ν(t) = ∏_{x ∈ X(ν)} (1 - q^x t) with X(ν) = Z_{≥0} minus {ν_j + j - 1}.

    For eventually constant ν, X(ν) ⊂ {0, ..., c + J - 1}, which has c
    elements.
    """
    _require_nonneg_nu(nu)
    horizon = nu.tail + nu.length
    hit = {nu.value(j) + j - 1 for j in range(1, nu.length + 1)}
    x_set = tuple(x for x in range(horizon) if x not in hit)
    poly = [Fraction(1)]
    for x in x_set:
        root = q.q ** x
        poly = [a - root * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return HNu(x_set, tuple(poly))


class SpecNu:
    """The specialization of symmetric functions with H-generating function H^ν."""

    def __init__(self, nu: NuSeq, q: QParam):
        _require_nonneg_nu(nu)
        self.nu = nu
        self.q = q
        self.hnu = h_nu(nu, q)

    def h(self, k: int) -> Fraction:
        if k < 0 or k > self.hnu.degree:
            return Fraction(0)
        return self.hnu.poly[k]

    def p(self, k: int) -> Fraction:
        """Σ_{i≤J} (q^{kν_i} - 1) q^{k(i-1)} + (q^{kc} - 1) q^{kJ} / (1 - q^k)."""
        q = self.q.q
        total = sum(((q ** (k * v) - 1) * q ** (k * i) for i, v in enumerate(self.nu.prefix)),
                    Fraction(0))
        return total + (q ** (k * self.nu.tail) - 1) * q ** (k * self.nu.length) / (1 - q ** k)

    def p_from_roots(self, k: int) -> Fraction:
        """-Σ_{x ∈ X(ν)} q^{kx}, the power sums read off H^ν."""
        return -sum((self.q.q ** (k * x) for x in self.hnu.x_set), Fraction(0))

    def h_from_p(self, k: int) -> Fraction:
        """h_k by the Newton recursion k h_k = Σ_{i=1}^{k} p_i h_{k-i}."""
        h = [Fraction(1)]
        for n in range(1, k + 1):
            h.append(sum((self.p(i) * h[n - i] for i in range(1, n + 1)), Fraction(0)) / n)
        return h[k]

    def s(self, mu: Signature) -> Fraction:
        """Jacobi-Trudi: Spec(s_μ) = det[h_{μ_i - i + j}]."""
        parts = mu.partition()
        if any(p < 0 for p in parts):
            raise NegativeCoordinate(f"{mu} has negative coordinates", mu=mu)
        if parts and parts[0] > self.hnu.degree:
            return Fraction(0)
        size = len(parts)
        return exact_det([[self.h(parts[i] - i + j) for j in range(size)] for i in range(size)])


def spec_nu(nu: NuSeq, q: QParam) -> SpecNu:
    return SpecNu(nu, q)


def first_mass_closed_form(nu: NuSeq, q: QParam) -> Fraction:
    """E^ν_1(ν_1) = H^ν(q^{-ν_1}) / ((1 - q^{-ν_1}) ⋯ (1 - q^{-1}))."""
    hnu = h_nu(nu, q)
    v1 = nu.value(1)
    value = hnu(q.q ** (-v1))
    for i in range(1, v1 + 1):
        value /= 1 - q.q ** (-i)
    return value


def support_box(nu: NuSeq, k: int) -> List[Signature]:
    """{μ ∈ GT_k^+ : μ ≥ (ν_k..ν_1), μ_1 ≤ c}, ordered by (|μ|, lex)."""
    _require_nonneg_nu(nu)
    floor = nu.reversed_signature(k)
    return [mu for mu in enumerate_partitions(k, nu.tail) if dominates(mu, floor)]


# ---------------------------------------------------------------------------
# Extreme projections

@lru_cache(maxsize=256)
def _extreme_projection(nu: NuSeq, k: int, q: QParam, epsilon: Fraction, cap: int) -> FiniteMeasure:
    hnu = h_nu(nu, q)
    p = q.inverse
    width = min(cap, hnu.degree)
    region = enumerate_partitions(k, width)
    floor = nu.reversed_signature(k)
    target = 1 - epsilon

    def value_at(mu: Signature) -> Fraction:
        value = Fraction(1)
        for i, c in enumerate(mu.coords):
            value *= hnu(q.q ** (-(k + c - i - 1)))
        return value

    masses: Dict[Signature, Fraction] = {}
    accumulated = Fraction(0)
    for mu, a_mu in iter_grid_solve(value_at, region, p):
        if not a_mu:
            continue
        mass = a_mu * interp_at_zero(mu, k, q)
        if not dominates(mu, floor):
            raise SupportViolation(f"E^ν_{k}({mu}) = {mass} outside μ ≥ {floor}", mu=mu, nu=nu)
        if mass < 0:
            raise NegativeMass(f"E^ν_{k}({mu}) = {mass} < 0", mu=mu, nu=nu)
        masses[mu] = mass
        accumulated += mass
        if accumulated >= target:
            break
    else:
        if accumulated < target:
            raise CapTooSmall(
                f"mass {accumulated} < 1 - ε after exhausting μ_1 ≤ {width}; raise cap",
                nu=nu, k=k, cap=cap,
            )
    logger.debug("E^%s_%d: %d masses, tail %s", nu, k, len(masses), 1 - accumulated)
    return FiniteMeasure(k, masses, 1 - accumulated)


def extreme_projection(
    nu: NuSeq,
    k: int,
    q: QParam,
    epsilon: Optional[Fraction] = None,
    cap: Optional[int] = None,
) -> FiniteMeasure:
    """
    E^ν_k by triangular solve of H^ν(x_1)⋯H^ν(x_k) on the grid.

    With p = q^{-1} and y = q^{k-1}x, the product equals
    Σ_μ a_μ s*_μ(y; p) and E^ν_k(μ) = a_μ s*_μ(0; p). The grid point of μ
    is x_i = q^{-(k + μ_i - i)}. μ is visited in (|μ|, lex) order over
    μ_1 ≤ min(cap, deg H^ν) until the accumulated mass reaches 1 - ε.

    Args:
        nu: Boundary parameter with ν_1 ≥ 0
        k: Level
        q: Deformation parameter
        epsilon: Tolerated tail mass, 0 ≤ ε < 1; 0 visits the whole region
        cap: Largest first coordinate to visit

    Returns:
        FiniteMeasure at level k whose tail is the unassigned mass
    """
    _require_nonneg_nu(nu)
    if k < 1:
        raise LevelOutOfRange(f"level must be positive, got {k}")
    epsilon = DEFAULT_EPSILON if epsilon is None else Fraction(epsilon)
    cap = DEFAULT_CAP if cap is None else int(cap)
    if not 0 <= epsilon < 1:
        raise InvalidMeasure(f"ε must lie in [0, 1), got {epsilon}")
    return _extreme_projection(nu, k, q, epsilon, cap)


# ---------------------------------------------------------------------------
# Generating functions

class Flavor(enum.Enum):
    Q_SCHUR = "q-schur"
    INTERPOLATION = "interpolation"


def sgen_eval(m: FiniteMeasure, x: Sequence, q: QParam, flavor: Flavor = Flavor.Q_SCHUR) -> Fraction:
    """
    Partial sum of a generating function over the support of m.

    q-schur:        Σ P(μ) s_μ(x) / s_μ(1, q^{-1}, ..., q^{1-N})
    interpolation:  Σ P(μ) s*_μ(q^{N-1}x; q^{-1}) / s*_μ(0; q^{-1})
    """
    n = m.level
    if len(x) != n:
        raise LevelMismatch(f"level {n} measure evaluated at {len(x)} points")
    total = Fraction(0)
    if flavor is Flavor.Q_SCHUR:
        for mu, w in m.items():
            total += w * schur_eval(mu, x) / principal_spec(mu, q, Direction.DESCENDING)
        return total
    scaled = tuple(q.q ** (n - 1) * v for v in x)
    engine = interp_evaluator(scaled, q.inverse)
    for mu, w in m.items():
        if not mu.is_nonneg():
            raise NegativeCoordinate(f"interpolation flavor needs nonnegative support, got {mu}")
        total += w * engine.value(mu.coords) / interp_at_zero(mu, n, q)
    return total


def schur_coherence_gap(m_high: FiniteMeasure, m_low: FiniteMeasure, x: Sequence, q: QParam) -> Fraction:
    """S(x; P_N) - S(x, q^{-N}; P_{N+1}); zero exactly for coherent pairs."""
    if m_high.level != m_low.level + 1:
        raise LevelMismatch("coherence needs adjacent levels")
    extended = tuple(x) + (q.q ** (-m_low.level),)
    return sgen_eval(m_low, x, q) - sgen_eval(m_high, extended, q)


def interp_truncation_bound(nu: NuSeq, m: FiniteMeasure, x: Sequence, q: QParam) -> Fraction:
    """
    Bound on |S*(x; E^ν_k) - S*(x; truncated E^ν_k)|.

    The missing masses are nonnegative, sum to the tail and sit in the
    finite support box, so tail × max |basis value| over the unvisited box
    bounds the error.
    """
    if not m.tail:
        return Fraction(0)
    k = m.level
    scaled = tuple(q.q ** (k - 1) * v for v in x)
    engine = interp_evaluator(scaled, q.inverse)
    largest = Fraction(0)
    for mu in support_box(nu, k):
        if mu not in m.masses:
            largest = max(largest, abs(engine.value(mu.coords) / interp_at_zero(mu, k, q)))
    return m.tail * largest


def cauchy_sum(nu: NuSeq, k: int, x: Sequence, q: QParam) -> Fraction:
    """Σ_{μ ∈ GT_k^+} Spec_ν(s_μ) s_μ(x); finite because μ_1 ≤ deg H^ν."""
    spec = SpecNu(nu, q)
    total = Fraction(0)
    for mu in enumerate_partitions(k, spec.hnu.degree):
        weight = spec.s(mu)
        if weight:
            total += weight * schur_eval(mu, x)
    return total


# ---------------------------------------------------------------------------
# Limit and prelimit coefficients

def limit_coefficient(mu: Signature, nu: NuSeq, q: QParam, spec: Optional[SpecNu] = None) -> Fraction:
    """(-1)^{|μ|} q^{n(μ) - n(μ')} Spec_ν(s_μ)."""
    spec = SpecNu(nu, q) if spec is None else spec
    stats = diagram_stats(mu.coords)
    value = q.q ** (stats.n - stats.n_conjugate) * spec.s(mu)
    return -value if stats.size % 2 else value


def prelimit_coefficient(mu: Signature, lam: Signature, q: QParam) -> Fraction:
    """
    q^{(N-1)|μ|} s*_μ(q^{λ-δ}; q) / (s*_μ(q^{μ-δ}; q) s_μ(1, q, ..., q^{N-1})).

    μ is padded with zeros to the level N of λ.
    """
    if not mu.is_nonneg() or not lam.is_nonneg():
        raise NegativeCoordinate("prelimit coefficients need nonnegative signatures")
    n = lam.level
    mu = mu.padded(n)
    if not contains(mu, lam):
        return Fraction(0)
    numerator = q.q ** ((n - 1) * mu.size) * interp_schur(mu, grid_point(lam, q.q), q.q)
    return numerator / (interp_diagonal(mu, q.q) * dim_q(mu, q))


def q_k_nu_exact(nu: NuSeq, k: int, x: Sequence, q: QParam) -> Fraction:
    """Q^ν_k(x) = Σ_μ limit_coefficient(μ) s*_μ(x; q), a finite sum here."""
    spec = SpecNu(nu, q)
    engine = interp_evaluator(x, q.q)
    total = Fraction(0)
    for mu in enumerate_partitions(k, spec.hnu.degree):
        c = limit_coefficient(mu, nu, q, spec)
        if c:
            total += c * engine.value(mu.coords)
    return total


def q_k_nu_truncated(
    nu: NuSeq,
    k: int,
    x: Sequence[complex],
    q: QParam,
    degree_cap: int,
) -> Tuple[complex, float]:
    """
    Approximate Q^ν_k at complex points in double precision.

    Sums |μ| ≤ degree_cap. The second value is the magnitude of the last
    layer |μ| = degree_cap, a heuristic for the neglected tail; it is 0.0
    when the cap already covers every nonzero coefficient.
    """
    spec = SpecNu(nu, q)
    points = np.asarray(x, dtype=np.complex128)
    if points.shape != (k,):
        raise LevelMismatch(f"need {k} points, got shape {points.shape}")
    qf = float(q.q)
    layers: Dict[int, complex] = {}
    for mu in enumerate_partitions(k, spec.hnu.degree, max_size=degree_cap):
        c = limit_coefficient(mu, nu, q, spec)
        if c:
            term = complex(c) * interp_schur_numeric(mu, points, qf)
            layers[mu.size] = layers.get(mu.size, 0j) + term
    value = complex(np.sum(np.array(list(layers.values()) or [0j], dtype=np.complex128)))
    complete = degree_cap >= spec.hnu.degree * k
    tail = 0.0 if complete else float(np.abs(layers.get(degree_cap, 0j)))
    return value, tail
