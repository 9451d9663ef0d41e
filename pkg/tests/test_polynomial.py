import pytest

from src.core.polynomial import (
    Q,
    X,
    coefficient,
    coefficients,
    constant_term,
    degree,
    divide_scalar,
    evaluate,
    exact_div,
    format_poly,
    from_descending,
    is_monic,
    monomial,
    one,
    poly,
    product,
    second_coefficient,
    zero,
)
from src.utils.errors import ExactnessError, NotDivisible


def test_ascending_coefficients():
    assert poly((1, 2, 0, 0)) == poly((1, 2))
    assert poly((0, 0)) == zero()
    assert poly(()) == zero()
    assert coefficients(poly((1, 2, 0))) == (1, 2)
    assert coefficients(zero()) == ()
    assert degree(zero()) == -1
    assert coefficient(poly((1, 2)), 5) == 0


def test_descending_constructor():
    f3 = from_descending([1, -10, 27, -20])
    assert f3.gen == X
    assert coefficients(f3) == (-20, 27, -10, 1)
    assert degree(f3) == 3
    assert is_monic(f3)
    assert second_coefficient(f3) == -10
    assert constant_term(f3) == -20
    assert not is_monic(zero())


def test_arithmetic_stays_in_the_package_type():
    p = poly((1, 1))
    assert p * p == poly((1, 2, 1))
    assert p**3 == poly((1, 3, 3, 1))
    assert p - p == zero()
    assert 2 - monomial(1) == poly((2, -1))
    assert 3 * monomial(1) == poly((0, 3))
    assert monomial(0) == one()
    assert monomial(2).gen == Q


def test_evaluate():
    p = from_descending([1, 1, 1])
    assert evaluate(p, 1) == 3
    assert evaluate(p, 2) == 7
    assert evaluate(p, -1) == 1
    assert isinstance(evaluate(p, 1), int)


def test_exact_division():
    f1 = from_descending([1, -2])
    f2 = from_descending([1, -5, 5])
    assert exact_div(f1 * f2, f1) == f2
    assert exact_div(f1**3 * f2, f1**2) == f1 * f2


def test_division_with_remainder_raises():
    x_sq_plus_one = from_descending([1, 0, 1])
    with pytest.raises(NotDivisible) as err:
        exact_div(x_sq_plus_one, from_descending([1, -1]))
    assert err.value.remainder == from_descending([2])
    with pytest.raises(ZeroDivisionError):
        exact_div(x_sq_plus_one, zero(X))


def test_non_monic_divisor_over_integers():
    with pytest.raises(NotDivisible):
        exact_div(from_descending([1, 0]), from_descending([2, 0]))


def test_divide_scalar():
    assert divide_scalar(poly((3, 6, 9)), 3) == poly((1, 2, 3))
    with pytest.raises(ExactnessError):
        divide_scalar(poly((3, 4)), 3)


def test_product_of_powers():
    f0 = from_descending([1, -1])
    f1 = from_descending([1, -2])
    assert product([(f0, 2), (f1, 1)]) == f0 * f0 * f1
    assert product([]) == one(X)


def test_format():
    assert format_poly(poly((1, 1, 1))) == "q^2+q+1"
    assert format_poly(from_descending([1, -10, 27, -20])) == "x^3-10x^2+27x-20"
    assert format_poly(poly((0, -1)), "x") == "-x"
    assert format_poly(zero()) == "0"
    assert format_poly(poly((5,))) == "5"
