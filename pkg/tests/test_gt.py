from fractions import Fraction

import pytest

from src.errors import EntryOutOfRange, Explosion, InvalidSignature, LevelMismatch
from src.gt import (
    Path,
    Signature,
    Tableau,
    contains,
    count_paths,
    diagram_stats,
    dominates,
    enumerate_below,
    enumerate_partitions,
    enumerate_paths_to,
    enumerate_signatures,
    interlaces,
    iter_tableaux,
    lozenge_cells,
    path_from_tableaux,
    path_weight,
    shift,
    shift_path,
    sub_partitions,
    tableaux_of_path,
    tiling_coords,
    volume,
)


def sig(*coords):
    return Signature(coords)


def test_signature_must_decrease():
    with pytest.raises(InvalidSignature):
        sig(0, 1)
    with pytest.raises(InvalidSignature):
        Signature(())


def test_signature_diagrams():
    lam = sig(3, 1, 0, -2, -4)
    assert lam.level == 5
    assert lam.size == -2
    assert lam.plus() == (3, 1)
    assert lam.minus() == (4, 2)
    assert str(lam) == "(3,1,0,-2,-4)"


def test_interlacing():
    assert interlaces(sig(1), sig(2, 0))
    assert not interlaces(sig(3), sig(2, 0))
    with pytest.raises(LevelMismatch):
        interlaces(sig(1), sig(1))


def test_enumerate_below():
    assert enumerate_below(sig(2, 0)) == [sig(0), sig(1), sig(2)]
    assert enumerate_below(sig(1, 1, -1)) == [sig(1, -1), sig(1, 0), sig(1, 1)]
    with pytest.raises(LevelMismatch):
        enumerate_below(sig(4))


def test_count_and_enumerate_paths():
    assert count_paths(sig(2, 0)) == 3
    paths = enumerate_paths_to(sig(2, 1, 0))
    assert len(paths) == count_paths(sig(2, 1, 0)) == 8
    assert all(p.top == sig(2, 1, 0) for p in paths)
    with pytest.raises(Explosion):
        enumerate_paths_to(sig(2, 0), cap=2)


def test_enumeration_is_logged(caplog):
    with caplog.at_level("DEBUG", logger="src.gt"):
        enumerate_paths_to(sig(2, 0))
    assert "enumerating 3 paths to" in caplog.text


def test_path_validates_interlacing():
    with pytest.raises(InvalidSignature):
        Path((sig(3), sig(2, 0)))
    with pytest.raises(LevelMismatch):
        Path((sig(1, 0),))


def test_path_weight(q):
    assert path_weight(Path((sig(1), sig(1, 0))), q) == Fraction(1, 2)
    assert path_weight(Path((sig(-1), sig(-1, -1))), q) == 2


def test_shift_commutes_with_branching():
    lam = sig(2, 0, -1)
    assert enumerate_below(shift(lam, 3)) == [shift(mu, 3) for mu in enumerate_below(lam)]


def test_shift_path():
    path = Path((sig(1), sig(1, 0)))
    assert shift_path(path, -2) == Path((sig(-1), sig(-1, -2)))


def test_orders():
    assert contains(sig(1, 0), sig(2, 1, 0))
    assert not contains(sig(2, 2), sig(2, 1))
    assert dominates(sig(2, 1), sig(1, 1))
    with pytest.raises(LevelMismatch):
        dominates(sig(1), sig(1, 0))


def test_enumerations():
    assert enumerate_signatures(2, 0, 1) == [sig(0, 0), sig(1, 0), sig(1, 1)]
    assert enumerate_partitions(2, 1) == [sig(0, 0), sig(1, 0), sig(1, 1)]
    assert enumerate_partitions(2, 2, max_size=2) == [sig(0, 0), sig(1, 0), sig(1, 1), sig(2, 0)]
    assert sub_partitions(sig(2, 1)) == [sig(0, 0), sig(1, 0), sig(1, 1), sig(2, 0), sig(2, 1)]


def test_diagram_stats():
    stats = diagram_stats((2, 1))
    assert stats.size == 3
    assert stats.n == 1
    assert stats.n_conjugate == 1
    assert stats.conjugate == (2, 1)
    assert stats.hooks == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert stats.contents == {(1, 1): 0, (1, 2): 1, (2, 1): -1}


def test_tableau_validation():
    with pytest.raises(InvalidSignature):
        Tableau(((2, 1),))
    with pytest.raises(InvalidSignature):
        Tableau(((1, 1), (1,)))
    with pytest.raises(InvalidSignature):
        Tableau(((1,), (1,)))


def test_volume_rejects_large_entries():
    with pytest.raises(EntryOutOfRange):
        volume(Tableau(((1, 3),)), 2)


def test_volume_identity_on_every_path():
    for top in (sig(2, 0, -1), sig(1, 1, -2), sig(0, -1, -1)):
        for path in enumerate_paths_to(top):
            t_plus, t_minus = tableaux_of_path(path)
            difference = volume(t_plus, 3) - volume(t_minus, 3)
            assert difference == sum(s.size for s in path.levels[:-1])
            assert path_from_tableaux(t_plus, t_minus, 3) == path


def test_negative_tableau_of_a_short_path():
    t_plus, t_minus = tableaux_of_path(Path((sig(-1), sig(-1, -1))))
    assert t_plus.shape == ()
    assert t_minus.rows == ((1,), (2,))
    assert volume(t_minus, 2) == 1


def test_iter_tableaux_counts_semistandard_fillings():
    assert len(list(iter_tableaux(sig(1, 0), 2))) == 2
    assert len(list(iter_tableaux(sig(2, 1, 0)))) == 8


def test_tiling_coords_of_the_zero_path():
    path = Path((sig(0), sig(0, 0), sig(0, 0, 0)))
    assert tiling_coords(path) == [(1, -1), (2, 0), (2, -1), (3, 1), (3, 0), (3, -1)]


def test_lozenge_classes():
    path = Path((sig(0), sig(0, 0)))
    cells = lozenge_cells(path, -2, 1)
    assert cells[(2, 0)] == 0
    assert cells[(2, -1)] == 0
    assert cells[(1, -1)] == 0
    assert cells[(2, 1)] == 1
    assert cells[(2, -2)] == 2
    assert cells[(1, 0)] == 1
    assert cells[(1, -2)] == 2
    assert set(cells.values()) <= {0, 1, 2}
