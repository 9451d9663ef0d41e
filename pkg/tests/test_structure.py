import pytest

from src.core.combinatorics import capped_compositions
from src.core.matrices import TransferKind, build_transfer, entry_sum, permute
from src.core.polynomial import (
    Polynomial,
    constant_term,
    degree,
    second_coefficient,
)
from src.evaluation.reference_data import CAPACITY2_CARDS, PRINTED_ORDERS
from src.evaluation.structure import (
    CAPACITY2_DENOMINATOR,
    CAPACITY2_NUMERATOR,
    FACTORS,
    capacity2_card_total,
    charpoly_factor_report,
    conjecture_check,
    exponent_row,
    series_coefficients,
    submatrix_containment_search,
)
from src.utils.errors import InfeasibleRequest


def test_series_coefficients():
    assert series_coefficients([1], [1, -1, -1], 7) == [1, 1, 2, 3, 5, 8, 13, 21]
    series = series_coefficients(CAPACITY2_NUMERATOR, CAPACITY2_DENOMINATOR, 3)
    assert series == [1, 2, 7, 17]
    with pytest.raises(ValueError):
        series_coefficients([1], [2, 1], 3)


def test_capacity2_cards():
    assert tuple(capacity2_card_total(b) for b in range(15)) == CAPACITY2_CARDS
    for b in range(0, 8):
        capped = build_transfer(b, TransferKind(kappa=2))
        assert entry_sum(capped) == capacity2_card_total(b)


def test_capacity2_is_not_product_over_capped_sides():
    # summing prod(r_i + 1) over capped right sides overcounts: the caught
    # group on the left can exceed the cap
    naive = 0
    for r in capped_compositions(3, 2):
        term = 1
        for p in r.parts:
            term *= p + 1
        naive += term
    assert naive == 20
    assert capacity2_card_total(3) == 17


def test_conjecture_small():
    report = conjecture_check(10)
    assert report.passed
    assert [r.series for r in report.rows][:5] == [1, 2, 7, 17, 41]


@pytest.mark.slow
def test_conjecture_through_25():
    assert conjecture_check(25).passed


def test_exponent_rows():
    assert exponent_row(2) == (0, 0, 1)
    assert exponent_row(3) == (1, 0, 0, 1)
    assert exponent_row(4) == (2, 1, 0, 0, 1)
    assert exponent_row(9)[1] == 37
    # P_b has degree 2^(b-1)
    for b in range(1, 14):
        total = sum(FACTORS.degrees[i] * e for i, e in enumerate(exponent_row(b)))
        assert total == 2 ** (b - 1)


def test_factor_table():
    assert FACTORS.size == 14
    assert FACTORS.is_full(4) and not FACTORS.is_full(5)
    assert FACTORS.constants[5] == -7840
    assert FACTORS.second_coefficients[5] == -36
    for i, f in enumerate(FACTORS.full_factors):
        assert degree(f) == FACTORS.degrees[i]
        assert second_coefficient(f) == FACTORS.second_coefficients[i]
        assert constant_term(f) == FACTORS.constants[i]
    with pytest.raises(ValueError):
        exponent_row(14)


@pytest.mark.parametrize("b", range(0, 5))
def test_small_factor_reports_are_exact(b):
    report = charpoly_factor_report(b)
    assert report.passed
    assert report.checks.get("exact", False)


@pytest.mark.parametrize("b", [5, 6, 7])
def test_factor_reports_partial_data(b):
    report = charpoly_factor_report(b)
    assert report.failure is None
    assert report.passed, report.checks
    assert degree(report.residual) == report.expected["degree"]


def test_factor_report_b5_residual_is_f5():
    report = charpoly_factor_report(5)
    assert report.residual_factors == (5,)
    assert degree(report.residual) == 7
    assert second_coefficient(report.residual) == -36
    assert constant_term(report.residual) == -7840
    assert report.divided == {0: 5, 1: 2, 2: 1}


@pytest.mark.slow
def test_factor_report_b8():
    report = charpoly_factor_report(8)
    assert report.residual_factors == (5, 8)
    assert report.passed


def test_factor_report_guard():
    with pytest.raises(InfeasibleRequest):
        charpoly_factor_report(9)


def test_containment():
    assert not submatrix_containment_search(1).found
    for b in (2, 3, 4):
        report = submatrix_containment_search(b)
        assert report.found
        small = build_transfer(b - 1)
        big = build_transfer(b)
        for s, t in report.witness:
            for u, v in report.witness:
                assert small.entry(s, u) == big.entry(t, v)


def test_containment_with_printed_order():
    report = submatrix_containment_search(4, PRINTED_ORDERS[3])
    assert report.found
    assert [s for s, _ in report.witness] == list(PRINTED_ORDERS[3])
    if report.triangular:
        ordered = permute(build_transfer(4), report.ordering)
        k = len(report.witness)
        lower_left = [row[:k] for row in ordered.entries[k:]]
        for r, row in enumerate(lower_left):
            assert all(x == 0 for x in row[:r])


def test_containment_guard():
    with pytest.raises(InfeasibleRequest):
        submatrix_containment_search(6)
    with pytest.raises(ValueError):
        submatrix_containment_search(0)


def test_residual_polynomial_type():
    assert isinstance(charpoly_factor_report(3).residual, Polynomial)
    assert charpoly_factor_report(3).residual == FACTORS.full_factors[3]
    assert charpoly_factor_report(2).divided == {}
