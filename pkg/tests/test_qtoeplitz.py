from fractions import Fraction

import pytest

from src.errors import IndexOutOfRange, ZeroPoint
from src.exact import q_factor_product
from src.gt import Signature, enumerate_partitions
from src.measures import NuSeq, extreme_projection, h_nu
from src.qtoeplitz import (
    NewtonExpansion,
    QToeplitz,
    c_lambda,
    c_lambda_minor,
    d_nu,
    from_first_column,
    initial_minor,
    initial_minors,
    minor_rows,
    newton_expand_1d,
    newton_to_polynomial,
    nonnegative_minor_violations,
    polynomial_from_roots,
    root_product_entry,
)


def sig(*coords):
    return Signature(coords)


def test_newton_expansion_examples(q):
    assert newton_expand_1d([1], q).coefficients == (1,)
    assert newton_expand_1d([1, -q.q], q).coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert newton_expand_1d([1, -1], q).coefficients == (0, 1)


def test_newton_expansion_evaluates_back(any_q):
    poly = (Fraction(2), Fraction(-1, 3), Fraction(5), Fraction(1, 7))
    expansion = newton_expand_1d(poly, any_q)
    assert newton_to_polynomial(expansion) == poly
    for t in (Fraction(0), Fraction(3, 2), Fraction(-4)):
        value = sum(c * t ** i for i, c in enumerate(poly))
        assert expansion(t) == value


def test_polynomial_from_roots():
    assert polynomial_from_roots([2]) == (1, Fraction(-1, 2))
    assert polynomial_from_roots([]) == (1,)
    with pytest.raises(ZeroPoint):
        polynomial_from_roots([0])


def test_matrix_from_first_column(q):
    matrix = from_first_column(newton_expand_1d([1, -q.q], q), 2, 2)
    assert matrix.entries == ((Fraction(1, 2), 0), (Fraction(1, 2), 0))
    assert matrix.entry(2, 2) == 0
    assert matrix.entry(0, 1) == 0
    assert matrix.first_column() == (Fraction(1, 2), Fraction(1, 2))
    assert matrix.check_recurrence()
    with pytest.raises(IndexOutOfRange):
        matrix.entry(3, 1)
    with pytest.raises(IndexOutOfRange):
        from_first_column(newton_expand_1d([1], q), 0, 2)


def test_broken_recurrence_is_detected(q):
    matrix = QToeplitz(q, ((Fraction(1), Fraction(5)), (Fraction(0), Fraction(0))))
    assert not matrix.check_recurrence()


def test_initial_minors(q):
    matrix = from_first_column(newton_expand_1d([1, -q.q], q), 3, 2)
    assert initial_minor(matrix, [1, 2]) == 0
    assert initial_minor(matrix, [2]) == q.q
    assert initial_minor(matrix, [2, 3]) == q.q ** 2
    with pytest.raises(IndexOutOfRange):
        initial_minor(matrix, [2, 1])
    with pytest.raises(IndexOutOfRange):
        initial_minor(matrix, [1, 4])
    minors = initial_minors(matrix, 2)
    assert set(minors) == {(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)}


def test_minor_rows():
    assert minor_rows(sig(1, 1)) == (2, 3)
    assert minor_rows(sig(2, 1, 0)) == (1, 3, 5)


def test_c_lambda_examples(q):
    poly = (Fraction(1), -q.q)
    assert c_lambda(poly, sig(0, 0), q) == 0
    assert c_lambda(poly, sig(1, 0), q) == 1 - q.q
    assert c_lambda(poly, sig(1, 1), q) == 1
    assert c_lambda(poly, sig(2, 0), q) == 0
    assert c_lambda(poly, sig(0, -1), q) == 0
    for lam in (sig(0, 0), sig(1, 0), sig(1, 1)):
        assert c_lambda_minor(poly, lam, q) == c_lambda(poly, lam, q)


def test_c_lambda_in_one_variable_is_newton(q):
    poly = (Fraction(1), Fraction(-3, 4), Fraction(1, 8))
    expansion = newton_expand_1d(poly, q)
    for ell, c in enumerate(expansion.coefficients):
        assert c_lambda(poly, sig(ell), q) == c


def test_c_lambda_matches_minors(any_q):
    poly = polynomial_from_roots([Fraction(3), Fraction(-2), Fraction(5, 2)])
    for n in (1, 2, 3):
        for lam in enumerate_partitions(n, 3):
            assert c_lambda(poly, lam, any_q) == c_lambda_minor(poly, lam, any_q)


def test_bridge_to_factorial_elementary(q):
    roots = (Fraction(2), Fraction(-1, 3))
    matrix = from_first_column(newton_expand_1d(polynomial_from_roots(roots), q), 5, 3)
    product = roots[0] * roots[1]
    for i in range(1, 6):
        for j in range(1, 4):
            assert matrix.entry(i, j) * product == root_product_entry(roots, i, j, q)


def test_d_nu(q):
    zero = d_nu(NuSeq((), 0), 3, 2, q)
    assert zero.first_column() == (1, 0, 0)
    matrix = d_nu(NuSeq((0,), 1), 3, 2, q)
    assert matrix.first_column() == (Fraction(1, 2), Fraction(1, 2), 0)


@pytest.mark.parametrize("text", ["0;1", "0;2", "1;3", "0 1;3"])
def test_total_positivity_and_normalization(q, text):
    nu = NuSeq.parse(text)
    assert nonnegative_minor_violations(d_nu(nu, 7, 4, q), 4) == []
    expansion = newton_expand_1d(h_nu(nu, q).poly, q)
    assert expansion.normalization() == 1
    first = extreme_projection(nu, 1, q, Fraction(0))
    for ell, c in enumerate(expansion.coefficients):
        assert c == first.mass(sig(ell)) * q.q ** (ell * (ell - 1) // 2)


def test_normalization_of_a_raw_sequence(q):
    assert NewtonExpansion(q, (Fraction(1), Fraction(1), Fraction(1))).normalization() == 1 + 1 + 2


def truncated_product(q, depth, scale=1):
    """(1 - qt/scale)(1 - q^2 t/scale)...(1 - q^depth t/scale), a truncation of the infinite product."""
    return polynomial_from_roots([scale * q.q ** -i for i in range(1, depth + 1)])


def test_c_lambda_of_truncations_converges_in_one_variable(q):
    # once depth ≥ ℓ the truncation vanishes at q^{-1}, ..., q^{-ℓ}, so c_ℓ is (q;q)_depth times a constant
    for ell in range(3):
        depths = range(ell, ell + 6)
        values = [c_lambda(truncated_product(q, d), sig(ell), q) for d in depths]
        ratios = {v / q_factor_product(q, d) for v, d in zip(values, depths)}
        assert len(ratios) == 1 and 0 not in ratios
        steps = [b - a for a, b in zip(values, values[1:])]
        for d, (step, following) in zip(depths, zip(steps, steps[1:])):
            assert following == step * q.q * (1 - q.q ** (d + 1))
            assert abs(following) < abs(step)


def test_c_lambda_of_truncations_converges_in_two_variables(q):
    box = enumerate_partitions(2, 2)

    def spread(depth):
        low, high = truncated_product(q, depth, 3), truncated_product(q, depth + 1, 3)
        return sum(abs(c_lambda(high, lam, q) - c_lambda(low, lam, q)) for lam in box)

    assert spread(7) < spread(5) < spread(3)
    poly = truncated_product(q, 4, 3)
    for lam in box:
        assert c_lambda(poly, lam, q) == c_lambda_minor(poly, lam, q)
