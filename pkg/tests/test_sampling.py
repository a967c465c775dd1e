from fractions import Fraction

import pytest

from src.errors import InvalidMeasure, LevelOutOfRange, TailHit
from src.gt import Path, Signature
from src.measures import FiniteMeasure, NuSeq, extreme_projection
from src.sampling import (
    UNIFORM_BITS,
    MixtureSpec,
    PathStream,
    binomial_sigma,
    last_coordinate_frequency,
    level_marginal,
    mixture_projection,
    path_law,
    sample_path_down,
    sample_tiling,
    sample_top,
    tv_distance,
)


def sig(*coords):
    return Signature(coords)


def test_streams_are_reproducible():
    a, b, other = PathStream(7, 3), PathStream(7, 3), PathStream(7, 4)
    first = [a.uniform_numerator() for _ in range(5)]
    assert first == [b.uniform_numerator() for _ in range(5)]
    assert first != [other.uniform_numerator() for _ in range(5)]
    assert all(0 <= k < 2 ** UNIFORM_BITS for k in first)


def test_choose():
    stream = PathStream(1)
    assert stream.choose([("only", Fraction(1))]) == "only"
    assert stream.choose([]) is None
    assert stream.choose([("never", Fraction(0)), ("always", Fraction(1))]) == "always"


def test_zero_nu_samples_the_zero_path(q):
    run, tilings = sample_tiling(NuSeq((), 0), 3, q, count=5, seed=11)
    zero = Path((sig(0), sig(0, 0), sig(0, 0, 0)))
    assert run.paths == [zero] * 5
    assert tilings[0] == [(1, -1), (2, 0), (2, -1), (3, 1), (3, 0), (3, -1)]


def test_sample_path_down_follows_interlacing(q):
    stream = PathStream(5)
    path = sample_path_down(sig(3, 1, -1, -2), q, stream)
    assert path.top == sig(3, 1, -1, -2)
    assert path.length == 4


def test_runs_are_deterministic(q):
    nu = NuSeq((0,), 1)
    first, _ = sample_tiling(nu, 4, q, count=20, seed=3)
    second, _ = sample_tiling(nu, 4, q, count=20, seed=3)
    assert first.paths == second.paths
    prefix, _ = sample_tiling(nu, 4, q, count=5, seed=3)
    assert prefix.paths == first.paths[:5]


def test_manifest(q):
    run, _ = sample_tiling(NuSeq((0,), 1), 2, q, count=3, seed=9, epsilon=Fraction(1, 100))
    assert run.manifest() == {
        "seed": 9, "spec": "0;1", "N": 2, "q": "1/2", "epsilon": "1/100", "cap": None, "count": 3,
    }


def test_tail_hit_is_reported(q):
    nu = NuSeq((0,), 2)
    with pytest.raises(TailHit):
        for index in range(60):
            sample_top(nu, 1, q, PathStream(7, index), epsilon=Fraction(9, 10))


def test_sample_tiling_rejects_bad_level(q):
    with pytest.raises(LevelOutOfRange):
        sample_tiling(NuSeq((0,), 1), 0, q, count=1)


def test_mixture_spec_validation():
    with pytest.raises(InvalidMeasure):
        MixtureSpec(((NuSeq((0,), 1), Fraction(1, 2)),))
    with pytest.raises(InvalidMeasure):
        MixtureSpec(((NuSeq((0,), 1), Fraction(3, 2)), (NuSeq((0,), 2), Fraction(-1, 2))))
    with pytest.raises(InvalidMeasure):
        MixtureSpec(())


def test_mixture_projection(q):
    spec = MixtureSpec(((NuSeq((), 0), Fraction(1, 2)), (NuSeq((0,), 1), Fraction(1, 2))))
    m = mixture_projection(spec, 1, q, Fraction(0))
    assert m.masses == {sig(0): Fraction(3, 4), sig(1): Fraction(1, 4)}
    run, _ = sample_tiling(spec, 2, q, count=10, seed=1, epsilon=Fraction(0))
    assert len(run.paths) == 10


def test_path_law(q):
    law = path_law(sig(2, 0), q)
    assert law == {
        Path((sig(0), sig(2, 0))): Fraction(4, 7),
        Path((sig(1), sig(2, 0))): Fraction(2, 7),
        Path((sig(2), sig(2, 0))): Fraction(1, 7),
    }


def test_marginals_and_distances(q):
    run, _ = sample_tiling(NuSeq((), 1), 3, q, count=4, seed=2)
    assert level_marginal(run, 2) == {sig(1, 1): 1}
    assert last_coordinate_frequency(run, NuSeq((), 1)) == 1
    with pytest.raises(LevelOutOfRange):
        level_marginal(run, 4)
    exact = FiniteMeasure(1, {sig(0): Fraction(1, 2)}, Fraction(1, 2))
    assert tv_distance({sig(0): Fraction(1, 2), sig(1): Fraction(1, 2)}, exact) == Fraction(1, 2)
    assert tv_distance({sig(0): Fraction(1)}, {sig(0): Fraction(1)}) == 0


def test_binomial_sigma():
    assert binomial_sigma(Fraction(1, 2), 100) == pytest.approx(0.05)


@pytest.mark.slow
def test_cotransition_frequencies(q):
    count = 10000
    hits = sum(1 for index in range(count)
               if sample_path_down(sig(1, 0), q, PathStream(7, index)).levels[0] == sig(1))
    expected = Fraction(1, 3)
    z = abs(hits / count - float(expected)) / binomial_sigma(expected, count)
    assert z <= 4


@pytest.mark.slow
def test_top_level_frequencies(q):
    nu = NuSeq((0,), 1)
    count = 10000
    run, _ = sample_tiling(nu, 3, q, count=count, seed=7, epsilon=Fraction(0))
    exact = extreme_projection(nu, 3, q, Fraction(0))
    for lam, p in level_marginal(run, 3).items():
        z = abs(float(p) - float(exact.mass(lam))) / binomial_sigma(exact.mass(lam), count)
        assert z <= 4
