import pytest

from src.core.cards import card_count, cards_from_count, cards_into_count
from src.core.combinatorics import Composition, capped_compositions
from src.core.matrices import (
    ExactMatrix,
    PolyMatrix,
    TransferKind,
    Variant,
    build_transfer,
    column_sums,
    entry_sum,
    evaluate_at,
    mat_mul,
    mat_pow,
    permute,
    principal_submatrix,
    row_sums,
    trace,
    transfer_trace,
)
from src.core.polynomial import one, poly
from src.evaluation.reference_data import (
    PRINTED_DISTINCT_MATRICES,
    PRINTED_MATRICES,
    PRINTED_ORDERS,
    PRINTED_Q_MATRIX_3,
    TRACES,
)
from src.utils.errors import DimensionMismatch, UsageError

C = Composition.of
Q = TransferKind(q_weighted=True)


@pytest.mark.parametrize("b", sorted(PRINTED_MATRICES))
def test_printed_matrices(b):
    a = permute(build_transfer(b), PRINTED_ORDERS[b])
    assert a.entries == PRINTED_MATRICES[b]


def test_a2_in_canonical_order():
    a = build_transfer(2)
    assert a.labels == (C(2), C(1, 1))
    assert a.entries == ((2, 1), (1, 3))
    assert a.entry(C(1, 1), C(2)) == 1


def test_printed_q_matrix():
    a = build_transfer(3, Q)
    assert isinstance(a, PolyMatrix)
    expected = tuple(tuple(poly(e) for e in row) for row in PRINTED_Q_MATRIX_3)
    assert permute(a, PRINTED_ORDERS[3]).entries == expected


@pytest.mark.parametrize("b", sorted(PRINTED_DISTINCT_MATRICES))
def test_printed_distinct_matrices(b):
    a = build_transfer(b, TransferKind(distinct=True))
    assert permute(a, PRINTED_ORDERS[b]).entries == PRINTED_DISTINCT_MATRICES[b]


@pytest.mark.parametrize("b", range(0, 6))
def test_q_matrix_at_one_is_plain(b):
    assert evaluate_at(build_transfer(b, Q)) == build_transfer(b)


@pytest.mark.parametrize("b", range(1, 6))
def test_row_and_column_sums(b):
    a = build_transfer(b)
    assert row_sums(a) == tuple(cards_from_count(q) for q in a.labels)
    assert column_sums(a) == tuple(cards_into_count(r) for r in a.labels)
    assert entry_sum(a) == card_count(b)


@pytest.mark.parametrize("kappa", [1, 2, 3])
def test_capped_is_principal_submatrix(kappa):
    full = build_transfer(5)
    capped = build_transfer(5, TransferKind(kappa=kappa))
    assert capped == principal_submatrix(full, capped_compositions(5, kappa))


def test_capacity_two_entry_sum():
    assert entry_sum(build_transfer(4, TransferKind(kappa=2))) == 41


def test_traces():
    for b in range(0, 8):
        assert trace(build_transfer(b)) == TRACES[b]
    for b in range(0, 16):
        assert transfer_trace(b) == TRACES[b]


def test_diagonal_trace_for_other_kinds():
    for kind in (Q, TransferKind(kappa=2), TransferKind(distinct=True)):
        for b in range(0, 6):
            assert transfer_trace(b, kind) == trace(build_transfer(b, kind))


def test_matrix_power():
    a = build_transfer(2)
    assert mat_pow(a, 0) == ExactMatrix.identity(2, a.labels)
    assert mat_pow(a, 1) == a
    assert mat_pow(a, 2).entries == ((5, 5), (5, 10))
    assert mat_pow(a, 5) == mat_mul(mat_pow(a, 2), mat_pow(a, 3))


def test_big_powers_stay_exact():
    a = mat_pow(build_transfer(5), 20)
    assert all(isinstance(x, int) for row in a.entries for x in row)
    assert trace(a) > 2**63


def test_q_matrix_power():
    a = build_transfer(2, Q)
    assert mat_pow(a, 0).entries[0][0] == one()
    assert evaluate_at(mat_pow(a, 3)) == mat_pow(build_transfer(2), 3)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        mat_mul(build_transfer(2), build_transfer(3))
    with pytest.raises(DimensionMismatch):
        ExactMatrix(((1, 2),))
    with pytest.raises(DimensionMismatch):
        permute(build_transfer(2), (C(2),))


def test_empty_matrix():
    a = ExactMatrix(())
    assert a.dim == 0
    assert trace(mat_mul(a, a)) == 0


def test_transfer_kinds():
    assert TransferKind.from_variant("plain") == TransferKind()
    assert TransferKind.from_variant(Variant.CAPPED, 2).kappa == 2
    assert TransferKind.from_variant("q_weighted_capped", 3).variant is (
        Variant.Q_WEIGHTED_CAPPED
    )
    assert TransferKind(distinct=True).tag == "int+distinct"
    assert Q.tag == "q"
    assert str(TransferKind(kappa=2)) == "capped(kappa=2)"
    with pytest.raises(UsageError):
        TransferKind.from_variant("capped")
    with pytest.raises(UsageError):
        TransferKind(kappa=0)
    with pytest.raises(ValueError):
        TransferKind.from_variant("triangular")
    with pytest.raises(UsageError):
        build_transfer(-1)
