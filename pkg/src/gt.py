# src/gt.py

"""
Signatures, interlacing, paths and tableaux of the Gelfand-Tsetlin graph,
plus the lozenge-tiling coordinates of a path.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.config_loader import load_qgt_config
from src.errors import (
    EntryOutOfRange,
    Explosion,
    InvalidSignature,
    LevelMismatch,
)
from src.exact import QParam

logger = logging.getLogger(__name__)

config = load_qgt_config()
PATH_CAP = int(config["enumeration_settings"]["path_cap"])


@dataclass(frozen=True, order=True)
class Signature:
    """A weakly decreasing integer tuple; its length is the level N."""

    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if not coords:
            raise InvalidSignature("a signature needs at least one coordinate")
        if any(coords[i] < coords[i + 1] for i in range(len(coords) - 1)):
            raise InvalidSignature(f"coordinates must be weakly decreasing: {coords}", coords=coords)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: int) -> "Signature":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, level: int) -> "Signature":
        return cls((0,) * level)

    @property
    def level(self) -> int:
        return len(self.coords)

    @property
    def size(self) -> int:
        """|λ|, the sum of coordinates."""
        return sum(self.coords)

    def is_nonneg(self) -> bool:
        return self.coords[-1] >= 0

    def plus(self) -> Tuple[int, ...]:
        """Row lengths of the positive diagram."""
        return tuple(c for c in self.coords if c > 0)

    def minus(self) -> Tuple[int, ...]:
        """Row lengths of the negative diagram, longest first."""
        return tuple(-c for c in reversed(self.coords) if c < 0)

    def padded(self, level: int) -> "Signature":
        if level < self.level:
            raise LevelMismatch(f"cannot pad level {self.level} down to {level}")
        return Signature(self.coords + (0,) * (level - self.level))

    def partition(self) -> Tuple[int, ...]:
        """Nonzero parts, for nonnegative signatures."""
        return tuple(c for c in self.coords if c != 0)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Path:
    """An interlacing chain τ(1) ≺ τ(2) ≺ ... ≺ τ(N)."""

    levels: Tuple[Signature, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        for k, sig in enumerate(levels, start=1):
            if sig.level != k:
                raise LevelMismatch(f"path entry {k} has level {sig.level}")
        for low, high in zip(levels, levels[1:]):
            if not interlaces(low, high):
                raise InvalidSignature(f"{low} does not interlace {high}")
        object.__setattr__(self, "levels", levels)

    @property
    def top(self) -> Signature:
        return self.levels[-1]

    @property
    def length(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class Tableau:
    """Semistandard filling stored row by row; row i holds T(i,1..λ_i)."""

    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if r)
        for i, row in enumerate(rows):
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise InvalidSignature(f"row {i + 1} is not weakly increasing: {row}")
            if i > 0:
                above = rows[i - 1]
                if len(row) > len(above):
                    raise InvalidSignature("rows of a tableau must weakly shrink")
                if any(above[j] >= row[j] for j in range(len(row))):
                    raise InvalidSignature(f"column strictness fails in row {i + 1}")
            if row and row[0] < i + 1:
                raise InvalidSignature(f"entry ({i + 1},1) is below its row index")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (i, j, T(i,j)) with 1-based box coordinates."""
        for i, row in enumerate(self.rows, start=1):
            for j, value in enumerate(row, start=1):
                yield i, j, value

    def restricted(self, k: int) -> Tuple[int, ...]:
        """Shape of the sub-tableau of entries <= k."""
        return tuple(n for n in (sum(1 for v in row if v <= k) for row in self.rows) if n)


@dataclass(frozen=True)
class DiagramStats:
    size: int
    n: int
    n_conjugate: int
    conjugate: Tuple[int, ...]
    hooks: Dict[Tuple[int, int], int]
    contents: Dict[Tuple[int, int], int]


# ---------------------------------------------------------------------------
# Young diagram statistics

def conjugate(parts: Sequence[int]) -> Tuple[int, ...]:
    """Transpose of a partition given by its (possibly zero-padded) rows."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def n_of(parts: Sequence[int]) -> int:
    """n(λ) = Σ (i-1) λ_i."""
    return sum(i * p for i, p in enumerate(parts))


def boxes(parts: Sequence[int]) -> Iterator[Tuple[int, int]]:
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            yield i, j


def diagram_stats(mu: Sequence[int]) -> DiagramStats:
    parts = tuple(p for p in mu if p > 0)
    conj = conjugate(parts)
    hooks = {(i, j): parts[i - 1] - i + conj[j - 1] - j + 1 for i, j in boxes(parts)}
    contents = {(i, j): j - i for i, j in boxes(parts)}
    return DiagramStats(
        size=sum(parts),
        n=n_of(parts),
        n_conjugate=n_of(conj),
        conjugate=conj,
        hooks=hooks,
        contents=contents,
    )


# ---------------------------------------------------------------------------
# Graph structure

def interlaces(mu: Signature, lam: Signature) -> bool:
    """True iff μ ≺ λ, i.e. λ_1 ≥ μ_1 ≥ λ_2 ≥ ... ≥ μ_N ≥ λ_{N+1}."""
    if mu.level + 1 != lam.level:
        raise LevelMismatch(
            f"interlacing needs levels N and N+1, got {mu.level} and {lam.level}",
            mu=mu, lam=lam,
        )
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(mu.level))


def enumerate_below(lam: Signature) -> List[Signature]:
    """All μ ≺ λ at level N-1, lexicographically ordered."""
    if lam.level < 2:
        raise LevelMismatch("level-1 signatures have nothing below them", lam=lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(lam.level - 1)]
    return [Signature(coords) for coords in itertools.product(*ranges)]


@lru_cache(maxsize=None)
def count_paths(lam: Signature) -> int:
    if lam.level == 1:
        return 1
    return sum(count_paths(mu) for mu in enumerate_below(lam))


def enumerate_paths_to(lam: Signature, cap: Optional[int] = None) -> List[Path]:
    """
    Brute-force list of every path ending at λ.

    Args:
        lam: Top signature
        cap: Largest tolerated number of paths (config default 10^7)

    Returns:
        Paths in lexicographic order of (τ(1), τ(2), ...)
    """
    cap = PATH_CAP if cap is None else cap
    total = count_paths(lam)
    if total > cap:
        raise Explosion(f"{total} paths end at {lam}, cap is {cap}", lam=lam, cap=cap)
    logger.debug("enumerating %d paths to %s", total, lam)

    def chains(sig: Signature) -> List[Tuple[Signature, ...]]:
        if sig.level == 1:
            return [(sig,)]
        return [chain + (sig,) for mu in enumerate_below(sig) for chain in chains(mu)]

    return [Path(chain) for chain in sorted(chains(lam))]


def path_weight(p: Path, q: QParam) -> Fraction:
    """w(τ) = q^{|τ(1)| + ... + |τ(N-1)|}."""
    return q.q ** sum(sig.size for sig in p.levels[:-1])


def shift(lam: Signature, l: int) -> Signature:
    """A_ℓ: add ℓ to every coordinate."""
    return Signature(tuple(c + l for c in lam.coords))


def shift_path(p: Path, l: int) -> Path:
    return Path(tuple(shift(sig, l) for sig in p.levels))


def contains(mu: Signature, lam: Signature) -> bool:
    """Diagram containment μ ⊆ λ for nonnegative signatures; levels may differ."""
    width = max(mu.level, lam.level)
    a = mu.coords + (0,) * (width - mu.level)
    b = lam.coords + (0,) * (width - lam.level)
    return all(x <= y for x, y in zip(a, b))


def dominates(lam: Signature, mu: Signature) -> bool:
    """Coordinate-wise order λ ≥ μ at a common level."""
    if lam.level != mu.level:
        raise LevelMismatch("coordinate-wise order needs equal levels", lam=lam, mu=mu)
    return all(a >= b for a, b in zip(lam, mu))


def enumerate_signatures(level: int, low: int, high: int) -> List[Signature]:
    """All signatures of the given level with coordinates in [low, high]."""
    return sorted(
        Signature(tuple(reversed(c)))
        for c in itertools.combinations_with_replacement(range(low, high + 1), level)
    )


def enumerate_partitions(level: int, width: int, max_size: Optional[int] = None) -> List[Signature]:
    """
    Nonnegative signatures with λ_1 ≤ width, ordered by (|λ|, lex).

    This order refines containment, which the grid solve relies on.
    """
    sigs = enumerate_signatures(level, 0, width)
    if max_size is not None:
        sigs = [s for s in sigs if s.size <= max_size]
    return sorted(sigs, key=lambda s: (s.size, s.coords))


def sub_partitions(lam: Signature) -> List[Signature]:
    """Every μ ⊆ λ at the same level, ordered by (|μ|, lex)."""
    ranges = [range(0, c + 1) for c in lam.coords]
    found = [Signature(c) for c in itertools.product(*ranges)
             if all(c[i] >= c[i + 1] for i in range(len(c) - 1))]
    return sorted(found, key=lambda s: (s.size, s.coords))


# ---------------------------------------------------------------------------
# Tableaux and volumes

def _diagram_tableau(shapes: Sequence[Tuple[int, ...]]) -> Tableau:
    """Label each box by the first index k whose shape contains it."""
    final = shapes[-1]
    rows = []
    for i, length in enumerate(final):
        row = []
        for j in range(length):
            k = next(k for k, shape in enumerate(shapes, start=1)
                     if len(shape) > i and shape[i] > j)
            row.append(k)
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def tableaux_of_path(p: Path) -> Tuple[Tableau, Tableau]:
    """The pair (T^+, T^-) recording when each box of τ(N)^± appears."""
    plus = _diagram_tableau([sig.plus() for sig in p.levels])
    minus = _diagram_tableau([sig.minus() for sig in p.levels])
    return plus, minus


def path_from_tableaux(t_plus: Tableau, t_minus: Tableau, level: int) -> Path:
    """Rebuild τ(1..N) from its two tableaux."""
    levels = []
    for k in range(1, level + 1):
        pos = t_plus.restricted(k)
        neg = t_minus.restricted(k)
        if len(pos) + len(neg) > k:
            raise EntryOutOfRange(f"tableau entries do not fit level {k}")
        coords = list(pos) + [0] * (k - len(pos))
        for i, row in enumerate(neg):
            coords[k - 1 - i] = -row
        levels.append(Signature(tuple(coords)))
    return Path(tuple(levels))


def volume(t: Tableau, level: int) -> int:
    """Cubes of the 3D diagram: N - k stacked on each box labelled k."""
    total = 0
    for i, j, value in t.entries():
        if not 1 <= value <= level:
            raise EntryOutOfRange(f"entry {value} at ({i},{j}) exceeds level {level}")
        total += level - value
    return total


def iter_tableaux(shape: Signature, level: Optional[int] = None) -> Iterator[Tableau]:
    """Semistandard tableaux of a nonnegative shape with entries in 1..level."""
    level = shape.level if level is None else level
    top = Signature(shape.partition()).padded(level) if shape.partition() else Signature.zero(level)
    for path in enumerate_paths_to(top):
        yield tableaux_of_path(path)[0]


# ---------------------------------------------------------------------------
# Lozenge tilings

def tiling_coords(p: Path) -> List[Tuple[int, int]]:
    """Horizontal lozenges at (N, λ(N)_i + N - i - 1), level by level."""
    return [(n, sig[i - 1] + n - i - 1)
            for n, sig in enumerate(p.levels, start=1)
            for i in range(1, n + 1)]


def lozenge_cells(p: Path, low: int, high: int) -> Dict[Tuple[int, int], int]:
    """
    Classify every cell (N, x), low <= x <= high, of the strip.

    0 marks a horizontal lozenge. A free cell gets 1 + (a_N(x) - a_{N-1}(x))
    where a_N(x) counts level-N lozenges strictly above x; interlacing keeps
    that difference in {0, 1}.
    """
    positions = {}
    for n, x in tiling_coords(p):
        positions.setdefault(n, set()).add(x)
    cells = {}
    for n in range(1, p.length + 1):
        here = positions[n]
        below = positions.get(n - 1, set())
        for x in range(low, high + 1):
            if x in here:
                cells[(n, x)] = 0
            else:
                above_here = sum(1 for y in here if y > x)
                above_below = sum(1 for y in below if y > x)
                cells[(n, x)] = 1 + (above_here - above_below)
    return cells
