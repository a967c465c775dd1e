# src/sampling.py

"""
Exact top-down sampling of paths under extreme q-central measures.

τ(N) is drawn from the exact projection E^ν_N, then each lower level from
the cotransition kernel. Every draw compares a 128-bit dyadic uniform
against exact cumulative sums, so the only floating point anywhere is in
the statistics helpers at the bottom.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, TypeVar, Union

import numpy as np

from src.config_loader import load_qgt_config
from src.errors import InvalidMeasure, LevelOutOfRange, TailHit
from src.exact import QParam
from src.gt import Path, Signature, enumerate_paths_to, path_weight, tiling_coords
from src.measures import FiniteMeasure, NuSeq, cotransition_row, extreme_projection
from src.schur import dim_q

logger = logging.getLogger(__name__)

config = load_qgt_config()
DEFAULT_SEED = int(config["sampling_settings"]["seed"])
DEFAULT_COUNT = int(config["sampling_settings"]["count"])

UNIFORM_BITS = 128
T = TypeVar("T")


class PathStream:
    """
    One reproducible substream per (seed, path index).

    Philox is counter based, so substreams do not depend on how many draws
    other paths consumed.
    """

    def __init__(self, seed: int, index: int = 0):
        self.seed = seed
        self.index = index
        self.bit_generator = np.random.Philox(np.random.SeedSequence([seed, index]))

    def uniform_numerator(self) -> int:
        """k with U = k / 2^128."""
        high, low = self.bit_generator.random_raw(2)
        return (int(high) << 64) | int(low)

    def choose(self, outcomes: Iterable[Tuple[T, Fraction]]) -> Optional[T]:
        """Inverse-CDF choice; None when U lands beyond the listed mass."""
        k = self.uniform_numerator()
        cumulative = Fraction(0)
        for item, p in outcomes:
            cumulative += p
            if k * cumulative.denominator < cumulative.numerator << UNIFORM_BITS:
                return item
        return None


@dataclass(frozen=True)
class MixtureSpec:
    """A finite mixture Σ w_i E^{ν_i} with exact weights summing to 1."""

    components: Tuple[Tuple[NuSeq, Fraction], ...]

    def __post_init__(self):
        components = tuple((nu, Fraction(w)) for nu, w in self.components)
        if not components:
            raise InvalidMeasure("a mixture needs at least one component")
        if any(w < 0 for _, w in components):
            raise InvalidMeasure("mixture weights must be nonnegative")
        total = sum((w for _, w in components), Fraction(0))
        if total != 1:
            raise InvalidMeasure(f"mixture weights sum to {total}", total=total)
        object.__setattr__(self, "components", components)

    def __str__(self) -> str:
        return " + ".join(f"{w}*[{nu}]" for nu, w in self.components)


@dataclass
class SampleRun:
    seed: int
    n_top: int
    q: QParam
    paths: List[Path] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)

    def manifest(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "spec": self.provenance.get("spec"),
            "N": self.n_top,
            "q": str(self.q),
            "epsilon": self.provenance.get("epsilon"),
            "cap": self.provenance.get("cap"),
            "count": len(self.paths),
        }


def mixture_projection(
    spec: MixtureSpec,
    k: int,
    q: QParam,
    epsilon: Optional[Fraction] = None,
    cap: Optional[int] = None,
) -> FiniteMeasure:
    """Σ w_i E^{ν_i}_k; the tail is the weighted sum of component tails."""
    masses: Dict[Signature, Fraction] = {}
    tail = Fraction(0)
    for nu, w in spec.components:
        if not w:
            continue
        component = extreme_projection(nu, k, q, epsilon, cap)
        for sig, m in component.masses.items():
            masses[sig] = masses.get(sig, Fraction(0)) + w * m
        tail += w * component.tail
    return FiniteMeasure(k, masses, tail)


def sample_top(
    nu: NuSeq,
    n: int,
    q: QParam,
    rng: PathStream,
    epsilon: Optional[Fraction] = None,
    cap: Optional[int] = None,
) -> Signature:
    """λ ~ E^ν_N; raises TailHit when the draw falls in the unassigned tail."""
    measure = extreme_projection(nu, n, q, epsilon, cap)
    lam = rng.choose(measure.items())
    if lam is None:
        raise TailHit(
            f"draw landed in the tail of E^{nu}_{n} (mass {measure.tail}); lower ε or raise cap",
            nu=nu, seed=rng.seed, index=rng.index,
        )
    return lam


def sample_top_mixture(
    spec: MixtureSpec,
    n: int,
    q: QParam,
    rng: PathStream,
    epsilon: Optional[Fraction] = None,
    cap: Optional[int] = None,
) -> Signature:
    nu = rng.choose(spec.components)
    return sample_top(nu, n, q, rng, epsilon, cap)


def sample_path_down(lam: Signature, q: QParam, rng: PathStream) -> Path:
    """τ(N) = λ, then τ(k-1) ~ P(τ(k) → ·) down to level 1."""
    levels = [lam]
    while levels[-1].level > 1:
        # the kernel rows sum to exactly 1, so the draw always lands
        levels.append(rng.choose(cotransition_row(levels[-1], q)))
    return Path(tuple(reversed(levels)))


def sample_tiling(
    spec: Union[NuSeq, MixtureSpec],
    n: int,
    q: QParam,
    count: int = DEFAULT_COUNT,
    seed: int = DEFAULT_SEED,
    epsilon: Optional[Fraction] = None,
    cap: Optional[int] = None,
) -> Tuple[SampleRun, List[List[Tuple[int, int]]]]:
    """
    Draw count independent paths and their horizontal-lozenge positions.

    Path i uses substream (seed, i), so runs are reproducible and any
    prefix of a run is itself a valid run.
    """
    if n < 1:
        raise LevelOutOfRange(f"top level must be positive, got {n}")
    run = SampleRun(seed, n, q, provenance={
        "spec": str(spec),
        "epsilon": None if epsilon is None else str(epsilon),
        "cap": cap,
    })
    tilings = []
    for index in range(count):
        rng = PathStream(seed, index)
        if isinstance(spec, MixtureSpec):
            top = sample_top_mixture(spec, n, q, rng, epsilon, cap)
        else:
            top = sample_top(spec, n, q, rng, epsilon, cap)
        path = sample_path_down(top, q, rng)
        run.paths.append(path)
        tilings.append(tiling_coords(path))
    logger.info("sampled %d paths of length %d with seed %d", count, n, seed)
    return run, tilings


# ---------------------------------------------------------------------------
# Laws and statistics

def path_law(lam: Signature, q: QParam) -> Dict[Path, Fraction]:
    """The conditional law of paths ending at λ: w(φ) / Dim_q(λ)."""
    total = dim_q(lam, q)
    return {path: path_weight(path, q) / total for path in enumerate_paths_to(lam)}


def level_marginal(run: SampleRun, k: int) -> Dict[Signature, Fraction]:
    if not 1 <= k <= run.n_top:
        raise LevelOutOfRange(f"level {k} is outside 1..{run.n_top}", k=k)
    counts = Counter(path.levels[k - 1] for path in run.paths)
    total = len(run.paths)
    return {sig: Fraction(c, total) for sig, c in counts.items()}


def tv_distance(empirical: Mapping[Signature, Fraction], exact: Union[FiniteMeasure, Mapping[Signature, Fraction]]) -> Fraction:
    """Half the L1 distance; the tail of a FiniteMeasure counts as an extra atom."""
    masses = exact.masses if isinstance(exact, FiniteMeasure) else exact
    keys = set(empirical) | set(masses)
    distance = sum((abs(Fraction(empirical.get(s, 0)) - Fraction(masses.get(s, 0))) for s in keys),
                   Fraction(0))
    if isinstance(exact, FiniteMeasure):
        distance += exact.tail
    return distance / 2


def last_coordinate_frequency(run: SampleRun, nu: NuSeq, depth: int = 3) -> Fraction:
    """Share of samples with τ(N)_{N+1-j} = ν_j for every j ≤ depth."""
    depth = min(depth, run.n_top)
    target = nu.first(depth)
    hits = sum(1 for path in run.paths
               if all(path.top[run.n_top - j] == target[j - 1] for j in range(1, depth + 1)))
    return Fraction(hits, len(run.paths)) if run.paths else Fraction(0)


def binomial_sigma(p: Fraction, count: int) -> float:
    """Standard deviation of a frequency with success probability p."""
    return float(np.sqrt(float(p) * (1 - float(p)) / count))
