from fractions import Fraction

import pytest

from src.errors import MissingGridValue, NegativeCoordinate
from src.gt import Signature, enumerate_partitions
from src.interp import (
    FactorialSequence,
    binomial_expand,
    binomial_expand_interp,
    complement_conjugate,
    dual_cauchy_terms,
    evaluate_interp_expansion,
    evaluate_schur_expansion,
    factorial_elementary,
    factorial_schur,
    factorial_schur_det_e,
    g_maps_on_schur,
    grid_point,
    grid_triangular_solve,
    interp_at_grid,
    interp_at_zero,
    interp_diagonal,
    interp_schur,
    interp_schur_numeric,
)
from src.schur import schur_eval


def sig(*coords):
    return Signature(coords)


HALF = Fraction(1, 2)


def test_one_variable_interpolation_polynomials():
    assert interp_schur(sig(1), (3,), HALF) == 2
    assert interp_schur(sig(2), (3,), HALF) == 5


def test_interp_at_zero(q):
    assert interp_at_zero(sig(1), 1, q) == -1
    assert interp_at_zero(sig(0, 0), 2, q) == 1


def test_vanishing_and_diagonal(any_q):
    p = any_q.q
    for lam in enumerate_partitions(2, 2):
        for mu in enumerate_partitions(2, 2):
            value = interp_at_grid(mu, lam, p)
            if mu == lam:
                assert value == interp_diagonal(mu, p)
            elif mu[0] > lam[0] or mu[1] > lam[1]:
                assert value == 0


def test_grid_point():
    assert grid_point(sig(2, 1, 0), HALF) == (Fraction(1, 4), Fraction(1), Fraction(4))


def test_factorial_methods_agree(rng):
    a = FactorialSequence.from_values([Fraction(int(v), 2) for v in rng.integers(-6, 7, size=10)])
    x = (Fraction(1, 3), Fraction(-2), Fraction(5, 2))
    for lam in (sig(2, 1, 0), sig(2, 2, 1), sig(3, 0, 0)):
        tableau = factorial_schur(lam, x, a, "tableau")
        assert factorial_schur(lam, x, a, "determinant") == tableau
        assert factorial_schur(lam, x, a, "branching") == tableau
        assert factorial_schur_det_e(lam, x, a) == tableau


def test_zero_sequence_gives_ordinary_schur():
    x = (Fraction(2), Fraction(3))
    assert factorial_schur(sig(2, 1), x, FactorialSequence.zero()) == schur_eval(sig(2, 1), x)


def test_factorial_elementary_edges():
    a = FactorialSequence.zero()
    assert factorial_elementary(0, (1, 2), a) == 1
    assert factorial_elementary(3, (1, 2), a) == 0
    assert factorial_elementary(2, (2, 3), a) == 6


def test_factorial_schur_needs_nonnegative():
    with pytest.raises(NegativeCoordinate):
        factorial_schur(sig(0, -1), (1, 2), FactorialSequence.zero())


def test_numeric_matches_exact():
    mu = sig(2, 1)
    x = (Fraction(1, 3), Fraction(2))
    exact = interp_schur(mu, x, HALF)
    approx = interp_schur_numeric(mu, [complex(v) for v in x], 0.5)
    assert approx == pytest.approx(complex(float(exact)), abs=1e-12)


def test_binomial_expansion_in_one_variable(q):
    assert binomial_expand(sig(1), 1, q) == {sig(0): 1, sig(1): 1}
    assert binomial_expand_interp(sig(2), 1, q) == {sig(0): q.q, sig(1): -1 - q.q, sig(2): 1}


def test_binomial_round_trip(any_q, rng):
    lam = sig(2, 1, 0)
    forward = binomial_expand(lam, 3, any_q)
    backward = binomial_expand_interp(lam, 3, any_q)
    for _ in range(5):
        x = tuple(Fraction(int(v), 3) for v in rng.integers(-9, 10, size=3))
        assert evaluate_interp_expansion(forward, x, any_q.q) == schur_eval(lam, x)
        assert evaluate_schur_expansion(backward, x) == interp_schur(lam, x, any_q.q)


def test_grid_solve_recovers_coefficients():
    target = {sig(0, 0): Fraction(2), sig(1, 0): Fraction(1), sig(1, 1): Fraction(0)}
    values = {lam: evaluate_interp_expansion(target, grid_point(lam, HALF), HALF) for lam in target}
    assert grid_triangular_solve(values, 2, HALF) == target


def test_grid_solve_is_logged(caplog):
    values = {sig(0, 0): Fraction(1), sig(1, 0): Fraction(3)}
    with caplog.at_level("DEBUG", logger="src.interp"):
        grid_triangular_solve(values, 2, HALF)
    assert "grid solve: 2 grid points at level 2" in caplog.text


def test_grid_solve_needs_closed_support():
    with pytest.raises(MissingGridValue):
        grid_triangular_solve({sig(1, 0): Fraction(1)}, 2, HALF)


def test_complement_conjugate():
    assert complement_conjugate(sig(1, 0), 2) == sig(2, 1)
    assert complement_conjugate(sig(0, 0), 2) == sig(2, 2)


def test_dual_cauchy_identity():
    x = (Fraction(1, 2), Fraction(-3))
    y = (Fraction(2), Fraction(5, 3))
    a = FactorialSequence.from_values([Fraction(1), Fraction(-1, 2), Fraction(3), Fraction(2, 3), Fraction(0)])
    product = Fraction(1)
    for xi in x:
        for yj in y:
            product *= yj - xi
    assert dual_cauchy_terms(x, y, a) == product


@pytest.mark.parametrize("mu", [sig(0), sig(1), sig(2), sig(1, 0), sig(1, 1), sig(2, 1)])
def test_g_maps_agree(q, mu):
    k = mu.level
    left, right = g_maps_on_schur(mu, k, q)
    assert left == right
