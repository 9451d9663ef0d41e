# src/core/matrices.py
"""
Transfer matrices over compositions.

Rows and columns are indexed by compositions of b in canonical order
(restricted to parts <= kappa for the capped variants). Entry (u, v) counts
cards from u to v, or sums q^crossings over them for the q-weighted variants.

Products go through numpy object arrays so entries stay Python ints (or
sympy Polys over ZZ) and never overflow.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, ClassVar, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.core.cards import Card, cards_between, cards_into, has_distinct_heights
from src.core.combinatorics import Composition, capped_compositions
from src.core.polynomial import Polynomial, evaluate, monomial, poly
from src.core.polynomial import one as poly_one
from src.core.polynomial import zero as poly_zero
from src.utils.errors import DimensionMismatch, UsageError

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    PLAIN = "plain"
    CAPPED = "capped"
    DISTINCT_HEIGHTS = "distinct_heights"
    Q_WEIGHTED = "q_weighted"
    Q_WEIGHTED_CAPPED = "q_weighted_capped"


@dataclass(frozen=True)
class TransferKind:
    """Which transfer matrix: capacity cap, distinct-height filter, q weights"""

    kappa: Optional[int] = None
    distinct: bool = False
    q_weighted: bool = False

    def __post_init__(self):
        if self.kappa is not None and self.kappa < 1:
            raise UsageError(f"capacity must be >= 1, got {self.kappa}")

    @classmethod
    def from_variant(
        cls, variant: Union[Variant, str], kappa: Optional[int] = None
    ) -> "TransferKind":
        variant = Variant(variant)
        if variant in (Variant.CAPPED, Variant.Q_WEIGHTED_CAPPED) and kappa is None:
            raise UsageError(f"variant {variant.value} needs a capacity")
        if variant is Variant.PLAIN:
            return cls()
        if variant is Variant.CAPPED:
            return cls(kappa=kappa)
        if variant is Variant.DISTINCT_HEIGHTS:
            return cls(kappa=kappa, distinct=True)
        return cls(kappa=kappa, q_weighted=True)

    @property
    def variant(self) -> Variant:
        if self.q_weighted:
            return Variant.Q_WEIGHTED_CAPPED if self.kappa else Variant.Q_WEIGHTED
        if self.distinct:
            return Variant.DISTINCT_HEIGHTS
        return Variant.CAPPED if self.kappa else Variant.PLAIN

    @property
    def tag(self) -> str:
        """Entry ring and card filter, without the capacity"""
        tag = "q" if self.q_weighted else "int"
        return tag + "+distinct" if self.distinct else tag

    def capped(self, kappa: Optional[int]) -> "TransferKind":
        return TransferKind(kappa, self.distinct, self.q_weighted)

    def admits(self, card: Card) -> bool:
        return not self.distinct or has_distinct_heights(card)

    def weight(self, card: Card):
        return monomial(card.crossings) if self.q_weighted else 1

    def __str__(self) -> str:
        kappa = "inf" if self.kappa is None else str(self.kappa)
        return f"{self.variant.value}(kappa={kappa})"


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix of exact integers, optionally labelled by compositions"""

    entries: Tuple[Tuple[Any, ...], ...]
    labels: Optional[Tuple[Composition, ...]] = None

    zero: ClassVar[Any] = 0
    one: ClassVar[Any] = 1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch(f"matrix is not square: {len(rows)} rows")
        if self.labels is not None and len(self.labels) != len(rows):
            raise DimensionMismatch(f"{len(self.labels)} labels for dim {len(rows)}")
        object.__setattr__(self, "entries", rows)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def index_of(self, label: Composition) -> int:
        if self.labels is None:
            raise KeyError("matrix carries no labels")
        return self.labels.index(label)

    def entry(self, left: Composition, right: Composition):
        """Entry addressed by (row label, column label)"""
        return self.entries[self.index_of(left)][self.index_of(right)]

    @classmethod
    def identity(
        cls, dim: int, labels: Optional[Tuple[Composition, ...]] = None
    ) -> "ExactMatrix":
        rows = tuple(
            tuple(cls.one if i == j else cls.zero for j in range(dim))
            for i in range(dim)
        )
        return cls(rows, labels)

    def to_array(self) -> np.ndarray:
        arr = np.empty((self.dim, self.dim), dtype=object)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                arr[i, j] = x
        return arr

    @classmethod
    def from_array(
        cls, arr: np.ndarray, labels: Optional[Tuple[Composition, ...]] = None
    ) -> "ExactMatrix":
        return cls(tuple(tuple(row) for row in arr.tolist()), labels)


@dataclass(frozen=True)
class PolyMatrix(ExactMatrix):
    """Square matrix whose entries are polynomials in q"""

    zero: ClassVar[Any] = poly_zero()
    one: ClassVar[Any] = poly_one()

    def __post_init__(self):
        super().__post_init__()
        rows = tuple(
            tuple(x if isinstance(x, Polynomial) else poly((x,)) for x in r)
            for r in self.entries
        )
        object.__setattr__(self, "entries", rows)


Matrix = Union[ExactMatrix, PolyMatrix]


# -- building ---------------------------------------------------------------


@lru_cache(maxsize=64)
def build_transfer(b: int, kind: TransferKind = TransferKind()) -> Matrix:
    """
    Transfer matrix for b balls

    The capped variants are principal submatrices of the plain one: only
    cards with both sides inside the capped vertex set are counted.
    """
    if b < 0:
        raise UsageError(f"b must be nonnegative, got {b}")
    labels = capped_compositions(b, kind.kappa)
    index = {c: i for i, c in enumerate(labels)}
    dim = len(labels)

    if kind.q_weighted:
        exponents: List[List[Counter]] = [[Counter() for _ in labels] for _ in labels]
        for j, r in enumerate(labels):
            for card in cards_into(r):
                i = index.get(card.left)
                if i is not None and kind.admits(card):
                    exponents[i][j][card.crossings] += 1
        rows = tuple(
            tuple(_counter_to_poly(cell) for cell in row) for row in exponents
        )
        logger.debug(f"Built {kind} for b={b}: dim {dim}")
        return PolyMatrix(rows, labels)

    counts = [[0] * dim for _ in range(dim)]
    for j, r in enumerate(labels):
        for card in cards_into(r):
            i = index.get(card.left)
            if i is not None and kind.admits(card):
                counts[i][j] += 1
    logger.debug(f"Built {kind} for b={b}: dim {dim}")
    return ExactMatrix(tuple(tuple(row) for row in counts), labels)


def _counter_to_poly(cell: Counter) -> Polynomial:
    if not cell:
        return poly_zero()
    coeffs = [0] * (max(cell) + 1)
    for e, c in cell.items():
        coeffs[e] = c
    return poly(coeffs)


def transfer_trace(b: int, kind: TransferKind = TransferKind()):
    """
    trace of the transfer matrix from the diagonal cards alone

    Never builds the matrix, so it stays cheap well past the sizes where
    a dense 2^(b-1) square would be built.
    """
    total = poly_zero() if kind.q_weighted else 0
    for q in capped_compositions(b, kind.kappa):
        for card in cards_between(q, q):
            if kind.admits(card):
                total = total + kind.weight(card)
    return total


# -- arithmetic -------------------------------------------------------------


def _result_labels(a: Matrix, b: Matrix) -> Optional[Tuple[Composition, ...]]:
    return a.labels if a.labels == b.labels else None


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; the result is a PolyMatrix if either factor is"""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply dims {a.dim} and {b.dim}")
    poly = isinstance(a, PolyMatrix) or isinstance(b, PolyMatrix)
    cls = PolyMatrix if poly else ExactMatrix
    if a.dim == 0:
        return cls((), _result_labels(a, b))
    product = a.to_array().dot(b.to_array())
    return cls.from_array(product, _result_labels(a, b))


def mat_pow(a: Matrix, n: int) -> Matrix:
    """a^n by repeated squaring; a^0 is the identity"""
    if n < 0:
        raise ValueError(f"negative matrix power {n}")
    result = type(a).identity(a.dim, a.labels)
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def trace(a: Matrix):
    total = type(a).zero
    for i in range(a.dim):
        total = total + a.entries[i][i]
    return total


def row_sums(a: Matrix) -> Tuple:
    return tuple(_sum(row, type(a).zero) for row in a.entries)


def column_sums(a: Matrix) -> Tuple:
    return tuple(
        _sum((row[j] for row in a.entries), type(a).zero) for j in range(a.dim)
    )


def entry_sum(a: Matrix):
    return _sum(row_sums(a), type(a).zero)


def _sum(values, zero):
    total = zero
    for v in values:
        total = total + v
    return total


def principal_submatrix(a: Matrix, keep: Sequence[Union[int, Composition]]) -> Matrix:
    """Rows and columns `keep` (indices or labels), in the given order"""
    idx = [k if isinstance(k, int) else a.index_of(k) for k in keep]
    rows = tuple(tuple(a.entries[i][j] for j in idx) for i in idx)
    labels = tuple(a.labels[i] for i in idx) if a.labels is not None else None
    return type(a)(rows, labels)


def permute(a: Matrix, order: Sequence[Composition]) -> Matrix:
    """Relabel rows and columns simultaneously into `order`"""
    if a.labels is None or len(order) != a.dim or set(order) != set(a.labels):
        raise DimensionMismatch("order must be a permutation of the matrix labels")
    return principal_submatrix(a, list(order))


def evaluate_at(a: PolyMatrix, q: int = 1) -> ExactMatrix:
    """Substitute q into every entry"""
    rows = tuple(tuple(evaluate(p, q) for p in row) for row in a.entries)
    return ExactMatrix(rows, a.labels)
