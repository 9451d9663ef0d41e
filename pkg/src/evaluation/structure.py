# src/evaluation/structure.py
"""
Structure of the transfer matrices: the capacity-2 card count series, the
factorisation pattern of det(xI - A_b), and principal-submatrix containment
of A_{b-1} in A_b.
"""

import logging
from dataclasses import dataclass, field
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy

from src.core.cards import capped_card_count
from src.core.charpoly import char_poly
from src.core.combinatorics import Composition
from src.core.matrices import ExactMatrix, build_transfer, permute
from src.core.polynomial import (
    Q,
    Polynomial,
    constant_term,
    degree,
    exact_div,
    from_descending,
    is_monic,
    poly,
    product,
    second_coefficient,
)
from src.utils.errors import NotDivisible, check_guard

logger = logging.getLogger(__name__)


def _pp(*pairs: Tuple[int, int]) -> int:
    return prod(p**e for p, e in pairs)


@dataclass(frozen=True)
class FactorTable:
    """
    Known factors f_i of P_b = det(xI - A_b)

    f_0..f_4 are known in full. For f_5..f_13 only the degree, the
    coefficient below the leading one and the constant term are known.
    """

    full_factors: Tuple[Polynomial, ...]
    degrees: Tuple[int, ...]
    second_coefficients: Tuple[int, ...]
    constants: Tuple[int, ...]
    exponent_pattern: Tuple[int, ...]
    notes: Tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.degrees)

    def exponent_row(self, b: int) -> Tuple[int, ...]:
        """Exponents of f_0..f_b in P_b"""
        if not 0 <= b < len(self.exponent_pattern):
            raise ValueError(f"no exponent data for b={b}")
        return tuple(self.exponent_pattern[b - i] for i in range(b + 1))

    def is_full(self, i: int) -> bool:
        return i < len(self.full_factors)


FACTORS = FactorTable(
    full_factors=(
        from_descending([1, -1]),
        from_descending([1, -2]),
        from_descending([1, -5, 5]),
        from_descending([1, -10, 27, -20]),
        from_descending([1, -20, 135, -396, 518, -245]),
    ),
    degrees=(1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101),
    second_coefficients=tuple(
        -v for v in (1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, 752, 1165, 1770)
    ),
    constants=(
        -1,
        -2,
        5,
        -20,
        -245,
        -_pp((2, 5), (5, 1), (7, 2)),
        -_pp((2, 5), (3, 2), (5, 2), (7, 3)),
        -_pp((2, 11), (3, 2), (5, 3), (7, 4)),
        _pp((2, 10), (3, 4), (5, 4), (7, 6), (11, 2)),
        _pp((2, 21), (3, 5), (5, 6), (7, 8), (11, 2)),
        _pp((2, 21), (3, 9), (5, 8), (7, 12), (11, 3), (13, 2)),
        _pp((2, 38), (3, 12), (5, 11), (7, 16), (11, 4), (13, 2)),
        -_pp((2, 42), (3, 17), (5, 16), (7, 22), (11, 9), (13, 3)),
        -_pp((2, 70), (3, 23), (5, 21), (7, 29), (11, 11), (13, 4)),
    ),
    exponent_pattern=(1, 0, 0, 1, 2, 5, 9, 19, 37, 74, 148, 296, 591, 1183),
    notes=(
        "the published row for P_9 lists f_2^37 second; the exponent pattern "
        "gives f_1^37, which is what exponent_row(9) returns",
    ),
)


def exponent_row(b: int) -> Tuple[int, ...]:
    return FACTORS.exponent_row(b)


# -- capacity-2 cards -------------------------------------------------------

# (1 - x + x^2 + x^3) / (1 - x - x^2)^3
CAPACITY2_NUMERATOR = poly((1, -1, 1, 1))
CAPACITY2_DENOMINATOR = poly((1, -1, -1)) ** 3


def series_coefficients(
    numerator: Union[Polynomial, Sequence[int]],
    denominator: Union[Polynomial, Sequence[int]],
    order: int,
) -> List[int]:
    """
    First order+1 power series coefficients of numerator/denominator

    The denominator's constant term must be +1 or -1 so every coefficient
    stays an integer.
    """
    num, den = (
        p if isinstance(p, Polynomial) else poly(p) for p in (numerator, denominator)
    )
    lead = constant_term(den)
    if lead not in (1, -1):
        raise ValueError(f"denominator constant term must be a unit, got {lead}")
    expansion = sympy.series(num.as_expr() / den.as_expr(), Q, 0, order + 1)
    truncated = expansion.removeO()
    return [int(truncated.coeff(Q, k)) for k in range(order + 1)]


def capacity2_card_total(b: int) -> int:
    """Cards with every group of at most 2 balls; the entry sum of A_{b,2}"""
    return capped_card_count(b, 2)


@dataclass(frozen=True)
class ConjectureRow:
    balls: int
    series: int
    cards: int

    @property
    def passed(self) -> bool:
        return self.series == self.cards


@dataclass(frozen=True)
class ConjectureReport:
    b_max: int
    rows: Tuple[ConjectureRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def conjecture_check(b_max: int) -> ConjectureReport:
    if b_max < 0:
        raise ValueError(f"b_max must be >= 0, got {b_max}")
    series = series_coefficients(CAPACITY2_NUMERATOR, CAPACITY2_DENOMINATOR, b_max)
    rows = tuple(
        ConjectureRow(b, series[b], capacity2_card_total(b)) for b in range(b_max + 1)
    )
    report = ConjectureReport(b_max, rows)
    logger.info(f"capacity-2 series through b={b_max}: passed={report.passed}")
    return report


# -- characteristic polynomial factors ----------------------------------------


@dataclass
class FactorReport:
    balls: int
    char_poly: Polynomial
    divided: Dict[int, int] = field(default_factory=dict)  # f_i -> exponent
    residual: Optional[Polynomial] = None
    residual_factors: Tuple[int, ...] = ()
    checks: Dict[str, bool] = field(default_factory=dict)
    expected: Dict[str, int] = field(default_factory=dict)
    failure: Optional[str] = None
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.failure is None and all(self.checks.values())


def charpoly_factor_report(
    b: int,
    *,
    force: bool = False,
    max_balls: int = 8,
) -> FactorReport:
    """
    Divide P_b by the fully known factors with their expected exponents and
    compare what is left with the partial data of the remaining factors
    """
    check_guard("max_charpoly_balls", b, max_balls, force, "A_b has 2^(b-1) rows")
    row = exponent_row(b)
    p = char_poly(build_transfer(b))
    report = FactorReport(balls=b, char_poly=p, notes=FACTORS.notes)

    residual = p
    for i in range(min(len(FACTORS.full_factors), b + 1)):
        e = row[i]
        if not e or i == b:
            continue
        try:
            residual = exact_div(residual, FACTORS.full_factors[i] ** e)
        except NotDivisible as err:
            report.failure = f"f_{i}^{e} does not divide P_{b}: {err}"
            return report
        report.divided[i] = e

    rest = tuple(i for i in range(b + 1) if row[i] and i not in report.divided)
    report.residual = residual
    report.residual_factors = rest
    report.expected = {
        "degree": sum(FACTORS.degrees[i] * row[i] for i in rest),
        "second_coefficient": sum(
            FACTORS.second_coefficients[i] * row[i] for i in rest
        ),
        "constant": prod(FACTORS.constants[i] ** row[i] for i in rest),
    }
    report.checks = {
        "monic": is_monic(residual),
        "degree": degree(residual) == report.expected["degree"],
        "second_coefficient": second_coefficient(residual)
        == report.expected["second_coefficient"],
        "constant": constant_term(residual) == report.expected["constant"],
    }
    if all(FACTORS.is_full(i) for i in rest):
        known = product((FACTORS.full_factors[i], row[i]) for i in rest)
        report.checks["exact"] = residual == known
    logger.info(f"P_{b} factor report: residual f{list(rest)} passed={report.passed}")
    return report


# -- containment ---------------------------------------------------------------


@dataclass(frozen=True)
class ContainmentReport:
    balls: int
    witness: Optional[Tuple[Tuple[Composition, Composition], ...]]
    triangular: Optional[bool]
    ordering: Optional[Tuple[Composition, ...]]
    witnesses_examined: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _embeddings(small: ExactMatrix, big: ExactMatrix, limit: int):
    """Injections phi with big[phi(i)][phi(j)] == small[i][j] for all i, j"""
    m, n = small.dim, big.dim
    phi: List[int] = []
    used = [False] * n
    found = 0

    def extend():
        nonlocal found
        i = len(phi)
        if i == m:
            found += 1
            yield tuple(phi)
            return
        for v in range(n):
            if used[v] or big[v, v] != small[i, i]:
                continue
            if any(
                big[phi[j], v] != small[j, i] or big[v, phi[j]] != small[i, j]
                for j in range(i)
            ):
                continue
            phi.append(v)
            used[v] = True
            yield from extend()
            used[v] = False
            phi.pop()
            if found >= limit:
                return

    yield from extend()


def _triangular_order(
    big: ExactMatrix, phi: Tuple[int, ...]
) -> Optional[Tuple[int, ...]]:
    """Complement rows ordered so the lower-left block is upper triangular"""
    embedded = set(phi)
    rest = [v for v in range(big.dim) if v not in embedded]

    def leading_zeros(v: int) -> int:
        z = 0
        for col in phi:
            if big[v, col]:
                break
            z += 1
        return z

    ranked = sorted(rest, key=leading_zeros)
    if all(leading_zeros(v) >= k for k, v in enumerate(ranked)):
        return tuple(ranked)
    return None


def submatrix_containment_search(
    b: int,
    small_order: Optional[Sequence[Composition]] = None,
    *,
    force: bool = False,
    max_balls: int = 5,
    limit: int = 10_000,
) -> ContainmentReport:
    """
    Look for A_{b-1} as a principal submatrix of A_b

    Columns of the lower-left block follow `small_order` (canonical order by
    default). Returns the first witness that also makes that block upper
    triangular, else the first witness found.
    """
    check_guard("max_containment_balls", b, max_balls, force)
    if b < 1:
        raise ValueError(f"containment needs b >= 1, got {b}")
    small = build_transfer(b - 1)
    if small_order is not None:
        small = permute(small, small_order)
    big = build_transfer(b)

    first = None
    examined = 0
    for phi in _embeddings(small, big, limit):
        examined += 1
        if first is None:
            first = phi
        order = _triangular_order(big, phi)
        if order is not None:
            return _containment_report(b, small, big, phi, order, examined)
    if first is None:
        logger.info(f"A_{b - 1} is not a principal submatrix of A_{b}")
        return ContainmentReport(b, None, None, None, examined)
    return _containment_report(b, small, big, first, None, examined)


def _containment_report(
    b: int,
    small: ExactMatrix,
    big: ExactMatrix,
    phi: Tuple[int, ...],
    order: Optional[Tuple[int, ...]],
    examined: int,
) -> ContainmentReport:
    witness = tuple((small.labels[i], big.labels[v]) for i, v in enumerate(phi))
    ordering = None
    if order is not None:
        ordering = tuple(big.labels[v] for v in phi + order)
    return ContainmentReport(b, witness, order is not None, ordering, examined)

