# src/verify.py

"""
The identity battery behind `main.py verify`.

Every suite recomputes one family of identities two independent ways at
desk scale and reports a CheckResult. Suites run in a fixed order; the
run stops starting new suites once the time budget is spent and reports
the rest as skipped.
"""

import itertools
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src.config_loader import load_qgt_config, verify_budget_ms
from src.errors import QGTError
from src.exact import QParam, euler_product_enclosure, parse_scalar
from src.gt import (
    Path,
    Signature,
    contains,
    dominates,
    enumerate_below,
    enumerate_partitions,
    enumerate_paths_to,
    enumerate_signatures,
    path_from_tableaux,
    path_weight,
    shift,
    tableaux_of_path,
    volume,
)
from src.interp import (
    FactorialSequence,
    binomial_expand,
    binomial_expand_interp,
    dual_cauchy_terms,
    evaluate_interp_expansion,
    evaluate_schur_expansion,
    factorial_schur,
    factorial_schur_det_e,
    g_maps_on_schur,
    grid_point,
    interp_diagonal,
    interp_evaluator,
    interp_schur,
)
from src.measures import (
    Flavor,
    NuSeq,
    cauchy_sum,
    coherence_check,
    cotransition,
    extreme_projection,
    first_mass_closed_form,
    h_nu,
    interp_truncation_bound,
    limit_coefficient,
    prelimit_coefficient,
    primitive_first_closed_form,
    primitive_system,
    pushdown,
    q_k_nu_exact,
    schur_coherence_gap,
    sgen_eval,
    shift_measure,
)
from src.qtoeplitz import (
    NewtonExpansion,
    c_lambda,
    c_lambda_minor,
    d_nu,
    from_first_column,
    newton_expand_1d,
    newton_to_polynomial,
    nonnegative_minor_violations,
    polynomial_from_roots,
    root_product_entry,
)
from src.sampling import binomial_sigma, last_coordinate_frequency, level_marginal, sample_tiling
from src.schur import Direction, dim_q, principal_point, principal_spec, schur_branching_dp, schur_eval

logger = logging.getLogger(__name__)

config = load_qgt_config()
DEFAULT_Q = QParam(parse_scalar(config["arithmetic_settings"]["default_q"]))
EULER_TERMS = int(config["arithmetic_settings"]["euler_terms"])
DEFAULT_SEED = int(config["verify_settings"]["seed"])

EPSILON = Fraction(1, 10000)
NU_PREFIXES = [(0,), (1,), (0, 1), (0, 2), (1, 3), (0, 1, 3)]
INTERPOLATION_QS = [Fraction(1, 2), Fraction(2, 5), Fraction(9, 10)]
SAMPLE_COUNT = 10000
SAMPLING_LEVELS = (6, 10, 14)
PRELIMIT_LEVELS = (4, 6, 8)
RANDOM_POINTS = 20
TOEPLITZ_SEQUENCES = 30


@dataclass
class CheckResult:
    suite: str
    status: str  # pass, fail, flag or skip
    checks: int = 0
    detail: str = ""
    witness: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"


@dataclass
class VerifyContext:
    q: QParam
    seed: int
    rng: np.random.Generator


class Tally:
    """Counts checks and keeps the first failing and first flagged witness."""

    def __init__(self, suite: str):
        self.suite = suite
        self.checks = 0
        self.failure: Optional[str] = None
        self.flagged: Optional[str] = None

    def check(self, ok: bool, witness: Callable[[], str]) -> bool:
        self.checks += 1
        if not ok and self.failure is None:
            self.failure = witness()
            logger.debug("%s failed: %s", self.suite, self.failure)
        return ok

    def flag(self, witness: str) -> None:
        if self.flagged is None:
            self.flagged = witness

    def result(self, detail: str = "") -> CheckResult:
        if self.failure is not None:
            return CheckResult(self.suite, "fail", self.checks, detail, self.failure)
        if self.flagged is not None:
            return CheckResult(self.suite, "flag", self.checks, detail, self.flagged)
        return CheckResult(self.suite, "pass", self.checks, detail)


# ---------------------------------------------------------------------------
# Random inputs

def random_rational(rng: np.random.Generator, span: int = 3, max_den: int = 5) -> Fraction:
    """A nonzero rational in [-span, span] with denominator at most max_den."""
    while True:
        den = int(rng.integers(1, max_den + 1))
        value = Fraction(int(rng.integers(-span * den, span * den + 1)), den)
        if value:
            return value


def random_point(rng: np.random.Generator, n: int) -> Tuple[Fraction, ...]:
    return tuple(random_rational(rng) for _ in range(n))


def random_signature(rng: np.random.Generator, n: int, low: int, high: int) -> Signature:
    coords = sorted((int(v) for v in rng.integers(low, high + 1, size=n)), reverse=True)
    return Signature(tuple(coords))


def random_path(rng: np.random.Generator, top: Signature) -> Path:
    levels = [top]
    while levels[-1].level > 1:
        below = enumerate_below(levels[-1])
        levels.append(below[int(rng.integers(len(below)))])
    return Path(tuple(reversed(levels)))


def nu_test_set() -> List[NuSeq]:
    return [NuSeq(prefix, prefix[-1]) for prefix in NU_PREFIXES]


def _product(values) -> Fraction:
    total = Fraction(1)
    for v in values:
        total *= v
    return total


# ---------------------------------------------------------------------------
# Suites

def suite_branching(ctx: VerifyContext) -> CheckResult:
    tally = Tally("branching")
    for _ in range(20):
        n = int(ctx.rng.integers(2, 6))
        lam = random_signature(ctx.rng, n, -3, 3)
        x = random_point(ctx.rng, n)
        value = schur_branching_dp(lam, x)
        expanded = sum((schur_branching_dp(mu, x[:-1]) * x[-1] ** (lam.size - mu.size)
                        for mu in enumerate_below(lam)), Fraction(0))
        tally.check(value == expanded, lambda: f"branching at λ={lam}, x={x}")
        tally.check(schur_eval(lam, x) == value, lambda: f"engines disagree at λ={lam}, x={x}")
        ell = int(ctx.rng.integers(-2, 3))
        shifted = schur_branching_dp(shift(lam, ell), x)
        tally.check(shifted == _product(x) ** ell * value, lambda: f"homogeneity λ={lam}, ℓ={ell}")
        order = [int(i) for i in ctx.rng.permutation(n)]
        permuted = tuple(x[i] for i in order)
        tally.check(schur_branching_dp(lam, permuted) == value, lambda: f"symmetry λ={lam}, x={x}")
    return tally.result("branching rule, homogeneity, symmetry")


def suite_dimq(ctx: VerifyContext) -> CheckResult:
    tally = Tally("dimq")
    q = ctx.q

    @lru_cache(maxsize=None)
    def weighted(lam: Signature) -> Fraction:
        if lam.level == 1:
            return Fraction(1)
        return sum((q.q ** mu.size * weighted(mu) for mu in enumerate_below(lam)), Fraction(0))

    for n in range(1, 5):
        for lam in enumerate_signatures(n, -3, 3):
            expected = dim_q(lam, q)
            tally.check(weighted(lam) == expected, lambda: f"Dim_q{lam} = {expected}, graph sum {weighted(lam)}")
            if n <= 3:
                brute = sum((path_weight(p, q) for p in enumerate_paths_to(lam)), Fraction(0))
                tally.check(brute == expected, lambda: f"Dim_q{lam} = {expected}, path sum {brute}")
                for direction in Direction:
                    product = principal_spec(lam, q, direction)
                    dp = schur_branching_dp(lam, principal_point(n, q, direction))
                    tally.check(product == dp, lambda: f"{direction.value} s{lam}: product {product}, DP {dp}")
    return tally.result("N ≤ 4, coordinates in [-3, 3]")


def suite_volume(ctx: VerifyContext) -> CheckResult:
    tally = Tally("volume")
    q = ctx.q
    for _ in range(30):
        n = int(ctx.rng.integers(1, 7))
        path = random_path(ctx.rng, random_signature(ctx.rng, n, -3, 3))
        t_plus, t_minus = tableaux_of_path(path)
        difference = volume(t_plus, n) - volume(t_minus, n)
        expected = sum(sig.size for sig in path.levels[:-1])
        tally.check(difference == expected, lambda: f"V(T+)-V(T-) = {difference} != {expected} on {path.top}")
        tally.check(path_weight(path, q) == q.q ** difference, lambda: f"weight mismatch on {path.top}")
        tally.check(path_from_tableaux(t_plus, t_minus, n) == path, lambda: f"tableaux round trip on {path.top}")
    return tally.result("random paths, N ≤ 6")


def suite_interpolation(ctx: VerifyContext) -> CheckResult:
    tally = Tally("interpolation")
    for value in sorted(set(INTERPOLATION_QS) | {ctx.q.q}):
        for n in range(1, 5):
            box = enumerate_partitions(n, 4)
            for lam in box:
                engine = interp_evaluator(grid_point(lam, value), value)
                for mu in box:
                    v = engine.value(mu.coords)
                    if not contains(mu, lam):
                        tally.check(v == 0, lambda: f"s*_{mu} at grid of {lam} is {v}, q={value}")
                    elif mu == lam:
                        expected = interp_diagonal(mu, value)
                        tally.check(v == expected, lambda: f"s*_{mu} diagonal {v} != {expected}, q={value}")
    return tally.result("4×4 box, N ≤ 4, q ∈ {1/2, 2/5, 9/10}")


def suite_binomial(ctx: VerifyContext) -> CheckResult:
    tally = Tally("binomial")
    q = ctx.q
    for k in range(1, 4):
        for lam in enumerate_partitions(k, 3):
            forward = binomial_expand(lam, k, q)
            backward = binomial_expand_interp(lam, k, q)
            for _ in range(RANDOM_POINTS):
                x = random_point(ctx.rng, k)
                tally.check(evaluate_interp_expansion(forward, x, q.q) == schur_eval(lam, x),
                            lambda: f"s_{lam} expansion at {x}")
                tally.check(evaluate_schur_expansion(backward, x) == interp_schur(lam, x, q.q),
                            lambda: f"s*_{lam} expansion at {x}")
    return tally.result("3×3 box, k ≤ 3")


def suite_dual_cauchy(ctx: VerifyContext) -> CheckResult:
    tally = Tally("dual_cauchy")
    for _ in range(12):
        n, m = int(ctx.rng.integers(1, 4)), int(ctx.rng.integers(1, 4))
        x, y = random_point(ctx.rng, n), random_point(ctx.rng, m)
        a = FactorialSequence.from_values(random_point(ctx.rng, n + m + 1))
        product = _product(yj - xi for xi in x for yj in y)
        tally.check(dual_cauchy_terms(x, y, a) == product, lambda: f"dual Cauchy at x={x}, y={y}")
    return tally.result("N, m ≤ 3")


def suite_determinantal(ctx: VerifyContext) -> CheckResult:
    tally = Tally("determinantal")
    for _ in range(20):
        n = int(ctx.rng.integers(1, 4))
        lam = random_signature(ctx.rng, n, 0, 3)
        y = random_point(ctx.rng, n)
        a = FactorialSequence.from_values(random_point(ctx.rng, n + 8))
        tableau = factorial_schur(lam, y, a, "tableau")
        tally.check(factorial_schur_det_e(lam, y, a) == tableau, lambda: f"det formula at λ={lam}, y={y}")
    return tally.result("λ_1 ≤ 3, up to 3 variables")


def suite_g_maps(ctx: VerifyContext) -> CheckResult:
    tally = Tally("g_maps")
    for k in range(1, 3):
        for mu in enumerate_partitions(k, 2):
            left, right = g_maps_on_schur(mu, k, ctx.q)
            tally.check(left == right, lambda: f"G(s_{mu}) = {left}, G'(s_{mu}) = {right}")
    return tally.result("2×2 box, k ≤ 2")


def suite_coherence(ctx: VerifyContext) -> CheckResult:
    tally = Tally("coherence")
    q = ctx.q
    for n in range(2, 6):
        for lam in enumerate_signatures(n, -3, 3):
            total = sum((cotransition(lam, mu, q) for mu in enumerate_below(lam)), Fraction(0))
            tally.check(total == 1, lambda: f"cotransition row of {lam} sums to {total}")
    for _ in range(6):
        n = int(ctx.rng.integers(3, 6))
        lam = random_signature(ctx.rng, n, -2, 3)
        high = primitive_system(lam, n - 1, q)
        low = primitive_system(lam, n - 2, q)
        tally.check(coherence_check(high, low, q) == 0, lambda: f"primitive system of {lam} incoherent")
        x = random_point(ctx.rng, low.level)
        gap = schur_coherence_gap(high, low, x, q)
        tally.check(gap == 0, lambda: f"generating-function gap {gap} for {lam} at {x}")
    for nu in nu_test_set():
        for k in range(1, 3):
            tv = coherence_check(extreme_projection(nu, k + 1, q, EPSILON),
                                 extreme_projection(nu, k, q, EPSILON), q)
            tally.check(tv <= 2 * EPSILON, lambda: f"E^{nu} levels {k},{k + 1}: TV {tv}")
    return tally.result("stochasticity N ≤ 5, primitive and extreme systems")


def suite_bounds(ctx: VerifyContext) -> CheckResult:
    tally = Tally("bounds")
    q = ctx.q
    lower, upper = euler_product_enclosure(q, EULER_TERMS)
    for _ in range(10):
        n = int(ctx.rng.integers(2, 6))
        lam = random_signature(ctx.rng, n, -3, 3)
        mass = primitive_system(lam, 1, q).mass(Signature((lam[-1],)))
        closed = primitive_first_closed_form(lam, q)
        tally.check(mass == closed, lambda: f"P_1^{lam}(λ_N) = {mass}, product {closed}")
        tally.check(mass >= lower, lambda: f"P_1^{lam}(λ_N) = {mass} below {lower}")
        if mass < upper:
            tally.flag(f"P_1^{lam}(λ_N) lies inside the enclosure; raise euler_terms")
    for nu in nu_test_set():
        first = Signature((nu.value(1),))
        mass = extreme_projection(nu, 1, q, Fraction(0)).mass(first)
        closed = first_mass_closed_form(nu, q)
        tally.check(mass == closed, lambda: f"E^{nu}_1(ν_1) = {mass}, closed form {closed}")
        tally.check(mass >= lower, lambda: f"E^{nu}_1(ν_1) = {mass} below {lower}")
    return tally.result(f"enclosure with {EULER_TERMS} factors")


def suite_extreme(ctx: VerifyContext) -> CheckResult:
    tally = Tally("extreme")
    q = ctx.q
    nus = nu_test_set()
    for k in range(1, 4):
        measures = {nu: extreme_projection(nu, k, q, EPSILON) for nu in nus}
        for nu, m in measures.items():
            floor = nu.reversed_signature(k)
            tally.check(all(dominates(mu, floor) for mu in m.masses), lambda: f"E^{nu}_{k} leaves its support")
            tally.check(m.mass(floor) > 0, lambda: f"E^{nu}_{k}({floor}) = 0")
            moved = extreme_projection(nu.shift(1), k, q, EPSILON)
            tally.check(moved.masses == shift_measure(m, 1).masses, lambda: f"shift equivariance for {nu}, k={k}")
        for nu, other in itertools.permutations(nus, 2):
            if not nu.dominated_by(other):
                continue
            floor = nu.reversed_signature(k)
            theirs = measures[other]
            if floor in theirs.masses:
                bound = theirs.mass(floor)
            else:
                bound = theirs.tail if dominates(floor, other.reversed_signature(k)) else Fraction(0)
            mine = measures[nu].mass(floor)
            tally.check(mine > bound, lambda: f"E^{nu}_{k}({floor}) = {mine} vs E^{other} ≤ {bound}")
    return tally.result(f"ν test set, k ≤ 3, ε = {EPSILON}")


def suite_multiplicativity(ctx: VerifyContext) -> CheckResult:
    tally = Tally("multiplicativity")
    q = ctx.q
    for nu in nu_test_set():
        hnu = h_nu(nu, q)
        for k in range(1, 4):
            m = extreme_projection(nu, k, q, EPSILON)
            full = extreme_projection(nu, k, q, Fraction(0))
            for _ in range(RANDOM_POINTS):
                x = random_point(ctx.rng, k)
                product = _product(hnu(v) for v in x)
                value = sgen_eval(m, x, q, Flavor.INTERPOLATION)
                bound = interp_truncation_bound(nu, m, x, q)
                tally.check(abs(value - product) <= bound,
                            lambda: f"S*(E^{nu}_{k}) at {x}: {value} vs {product}, bound {bound}")
                tally.check(cauchy_sum(nu, k, x, q) == product, lambda: f"Cauchy sum for {nu} at {x}")
            x = random_point(ctx.rng, k)
            exact = q_k_nu_exact(nu, k, x, q)
            tally.check(exact == sgen_eval(full, x, q), lambda: f"Q^{nu}_{k} at {x} disagrees with S(E)")
    return tally.result("20 random points per (ν, k)")


def suite_qtoeplitz(ctx: VerifyContext) -> CheckResult:
    tally = Tally("qtoeplitz")
    q = ctx.q
    for _ in range(TOEPLITZ_SEQUENCES):
        length = int(ctx.rng.integers(1, 6))
        raw = [Fraction(int(v)) for v in ctx.rng.integers(0, 5, size=length)]
        if not any(raw):
            raw[0] = Fraction(1)
        scale = NewtonExpansion(q, tuple(raw)).normalization()
        expansion = NewtonExpansion(q, tuple(c / scale for c in raw))
        poly = newton_to_polynomial(expansion)
        recovered = newton_expand_1d(poly, q).coefficients
        padded = recovered + (Fraction(0),) * (length - len(recovered))
        tally.check(padded == expansion.coefficients, lambda: f"Newton round trip for {raw}")
        matrix = from_first_column(expansion, length + 4, 4)
        tally.check(matrix.check_recurrence(), lambda: f"recurrence broken for {raw}")
        for n in range(1, 4):
            for lam in enumerate_partitions(n, 4):
                by_solve = c_lambda(poly, lam, q)
                by_minor = c_lambda_minor(poly, lam, q)
                tally.check(by_solve == by_minor, lambda: f"c_{lam} = {by_solve}, minor side {by_minor}, c = {raw}")
    for _ in range(5):
        m = int(ctx.rng.integers(1, 4))
        roots = random_point(ctx.rng, m)
        matrix = from_first_column(newton_expand_1d(polynomial_from_roots(roots), q), m + 3, 3)
        for i in range(1, m + 4):
            for j in range(1, 4):
                lhs = matrix.entry(i, j) * _product(roots)
                tally.check(lhs == root_product_entry(roots, i, j, q), lambda: f"bridge d[{i},{j}] for roots {roots}")
    return tally.result("30 normalized sequences, λ_1 ≤ 4, N ≤ 3")


def suite_minors(ctx: VerifyContext) -> CheckResult:
    tally = Tally("minors")
    q = ctx.q
    for nu in nu_test_set():
        violations = nonnegative_minor_violations(d_nu(nu, 7, 4, q), 4)
        tally.check(not violations, lambda: f"negative initial minors of d^{nu}: rows {violations[:3]}")
        expansion = newton_expand_1d(h_nu(nu, q).poly, q)
        first = extreme_projection(nu, 1, q, Fraction(0))
        for ell, c in enumerate(expansion.coefficients):
            expected = first.mass(Signature((ell,))) * q.q ** (ell * (ell - 1) // 2)
            tally.check(c == expected, lambda: f"c_{ell} = {c} for {nu}, E-side {expected}")
        tally.check(expansion.normalization() == 1, lambda: f"normalization of {nu} is {expansion.normalization()}")
    return tally.result("rows ⊆ {1..7}, size ≤ 4")


def _z_check(tally: Tally, empirical: Fraction, exact: Fraction, count: int, label: str) -> None:
    if exact in (0, 1):
        tally.check(empirical == exact, lambda: f"{label}: {empirical} for an exact {exact}")
        return
    z = abs(float(empirical) - float(exact)) / binomial_sigma(exact, count)
    tally.check(z <= 4, lambda: f"{label}: {float(empirical):.4f} vs {float(exact):.4f} ({z:.1f}σ)")
    if z > 3:
        tally.flag(f"{label}: {z:.1f}σ")


def suite_sampling(ctx: VerifyContext) -> CheckResult:
    tally = Tally("sampling")
    q = ctx.q
    nu = NuSeq((0,), 1)
    top = SAMPLING_LEVELS[0]
    run, _ = sample_tiling(nu, top, q, SAMPLE_COUNT, ctx.seed, epsilon=Fraction(0))
    exact = extreme_projection(nu, top, q, Fraction(0))
    for k in range(top, 0, -1):
        empirical = level_marginal(run, k)
        for sig in set(empirical) | set(exact.masses):
            _z_check(tally, empirical.get(sig, Fraction(0)), exact.mass(sig), SAMPLE_COUNT, f"level {k} at {sig}")
        if k > 1:
            exact = pushdown(exact, q)
    frequencies, probabilities = [], []
    for n in SAMPLING_LEVELS:
        run, _ = sample_tiling(nu, n, q, SAMPLE_COUNT, ctx.seed, epsilon=Fraction(0))
        target = nu.first(3)
        probability = sum((w for lam, w in extreme_projection(nu, n, q, Fraction(0)).items()
                           if all(lam[n - j] == target[j - 1] for j in (1, 2, 3))), Fraction(0))
        frequency = last_coordinate_frequency(run, nu)
        _z_check(tally, frequency, probability, SAMPLE_COUNT, f"last coordinates at N={n}")
        frequencies.append(frequency)
        probabilities.append(probability)
    check_increasing_frequencies(tally, SAMPLING_LEVELS, frequencies, probabilities, SAMPLE_COUNT)
    if any(a >= b for a, b in zip(probabilities, probabilities[1:])):
        tally.flag(f"exact last-coordinate probabilities not increasing: {[float(p) for p in probabilities]}")
    return tally.result(f"{SAMPLE_COUNT} paths, ν = {nu}, N ∈ {SAMPLING_LEVELS}")


def check_increasing_frequencies(
    tally: Tally,
    levels: Tuple[int, ...],
    frequencies: List[Fraction],
    probabilities: List[Fraction],
    count: int,
) -> None:
    """Sampled frequencies may dip by noise only; a drop beyond 4σ of the difference fails."""
    steps = zip(levels[1:], frequencies, frequencies[1:], probabilities, probabilities[1:])
    for n, a, b, pa, pb in steps:
        sigma = float(np.hypot(binomial_sigma(pa, count), binomial_sigma(pb, count)))
        drop = float(a - b)
        label = f"last-coordinate frequency up to N={n}: {float(a):.4f} -> {float(b):.4f}"
        if sigma == 0:
            tally.check(b >= a, lambda: label)
            continue
        tally.check(drop <= 4 * sigma, lambda: f"{label} ({drop / sigma:.1f}σ drop)")
        if drop > 0:
            tally.flag(f"{label}, within noise")


def suite_prelimit(ctx: VerifyContext) -> CheckResult:
    tally = Tally("prelimit")
    q = ctx.q
    for nu in (NuSeq((0,), 1), NuSeq((0,), 2)):
        for mu in enumerate_partitions(2, 2):
            limit = limit_coefficient(mu, nu, q)
            gaps = [abs(prelimit_coefficient(mu, nu.reversed_signature(n), q) - limit) for n in PRELIMIT_LEVELS]
            converging = all(g == 0 for g in gaps) or all(a > b for a, b in zip(gaps, gaps[1:]))
            tally.check(converging, lambda: f"μ={mu}, ν={nu}: gaps {[str(g) for g in gaps]}")
    return tally.result(f"λ(N) = (ν_N..ν_1), N ∈ {PRELIMIT_LEVELS}, 2×2 box")


SUITES: Dict[str, Callable[[VerifyContext], CheckResult]] = {
    "branching": suite_branching,
    "dimq": suite_dimq,
    "volume": suite_volume,
    "interpolation": suite_interpolation,
    "binomial": suite_binomial,
    "dual_cauchy": suite_dual_cauchy,
    "determinantal": suite_determinantal,
    "g_maps": suite_g_maps,
    "coherence": suite_coherence,
    "bounds": suite_bounds,
    "extreme": suite_extreme,
    "multiplicativity": suite_multiplicativity,
    "qtoeplitz": suite_qtoeplitz,
    "minors": suite_minors,
    "sampling": suite_sampling,
    "prelimit": suite_prelimit,
}


def run_verify(
    suite: str = "all",
    q: Optional[QParam] = None,
    seed: Optional[int] = None,
    budget_ms: Optional[int] = None,
) -> List[CheckResult]:
    """
    Run one suite or all of them, in SUITES order.

    Each suite gets its own numpy generator seeded from (seed, position), so
    a single suite reproduces the same inputs as it does inside `all`.
    """
    q = DEFAULT_Q if q is None else q
    seed = DEFAULT_SEED if seed is None else seed
    budget_ms = verify_budget_ms(config) if budget_ms is None else budget_ms
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise KeyError(suite)

    deadline = time.monotonic() + budget_ms / 1000
    results = []
    for name in names:
        if time.monotonic() > deadline:
            results.append(CheckResult(name, "skip", detail="time budget spent"))
            continue
        position = list(SUITES).index(name)
        ctx = VerifyContext(q, seed, np.random.default_rng([seed, position]))
        started = time.monotonic()
        try:
            result = SUITES[name](ctx)
        except QGTError as e:
            result = CheckResult(name, "fail", detail="raised", witness=f"{type(e).__name__}: {e.message}")
        logger.info("suite %s: %s in %.1fs", name, result.status, time.monotonic() - started)
        results.append(result)
    return results
