# src/core/counting.py
"""
Counting multiplex juggling patterns from transfer-matrix traces.

    ss(b, n)  period-n siteswaps using exactly b balls
              = trace(A_b^n) - sum_{i=lo}^{b-1} trace(A_i^n),  lo = max(0, b - kappa)
    ms(b, n)  minimal period exactly n: Mobius inversion of ss over d | n
    jp(b, n)  juggling patterns (rotation classes): ms(b, n) / n, exactly

The same formulas run over the capped matrices A_{b,kappa}, the q-weighted
matrices A_b(q) (results are polynomials in q) and the distinct-height
matrices.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple, Union

from src.core.cache import TraceCache, get_cache
from src.core.combinatorics import (
    capped_composition_count,
    divisors,
    mobius,
    ones_count,
    partition_count,
    unordered_partitions,
)
from src.core.matrices import (
    TransferKind,
    build_transfer,
    mat_pow,
    trace,
    transfer_trace,
)
from src.core.polynomial import Polynomial, divide_scalar
from src.core.polynomial import zero as poly_zero
from src.utils.errors import ExactnessError, UsageError

logger = logging.getLogger(__name__)

Count = Union[int, Polynomial]


def _check_args(b: int, n: int, kappa: Optional[int]) -> None:
    if b < 0:
        raise UsageError(f"number of balls must be >= 0, got {b}")
    if n < 1:
        raise UsageError(f"period must be >= 1, got {n}")
    if kappa is not None and kappa < 1:
        raise UsageError(f"capacity must be >= 1, got {kappa}")


def trace_power(b: int, n: int, kind: TransferKind = TransferKind()) -> Count:
    """trace(A^n) for the transfer matrix of `kind` on b balls, memoised"""
    if kind.kappa is not None and kind.kappa >= b:
        # the cap does not bite: same matrix as the uncapped one
        kind = kind.capped(None)
    cache = get_cache()
    key = TraceCache.key(kind.tag, b, kind.kappa, n)
    value = cache.get(key)
    if value is not None:
        return value
    if n == 1:
        value = transfer_trace(b, kind)
    else:
        value = trace(mat_pow(build_transfer(b, kind), n))
    cache.put(key, value)
    return value


def _lower_limit(b: int, kappa: Optional[int]) -> int:
    return 0 if kappa is None else max(0, b - kappa)


def _ss(b: int, n: int, kind: TransferKind) -> Count:
    _check_args(b, n, kind.kappa)
    total = trace_power(b, n, kind)
    for i in range(_lower_limit(b, kind.kappa), b):
        total = total - trace_power(i, n, kind)
    return total


def _ms(b: int, n: int, kind: TransferKind) -> Count:
    _check_args(b, n, kind.kappa)
    total: Count = poly_zero() if kind.q_weighted else 0
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            total = total + mu * _ss(b, d, kind)
    return total


def _jp(b: int, n: int, kind: TransferKind) -> Count:
    total = _ms(b, n, kind)
    if isinstance(total, Polynomial):
        return divide_scalar(total, n)
    quotient, rem = divmod(total, n)
    if rem:
        raise ExactnessError(f"{n} does not divide ms={total} (b={b}, kind={kind})")
    return quotient


# -- public counts ----------------------------------------------------------


def ss(b: int, n: int, kappa: Optional[int] = None) -> int:
    return _ss(b, n, TransferKind(kappa=kappa))


def ms(b: int, n: int, kappa: Optional[int] = None) -> int:
    return _ms(b, n, TransferKind(kappa=kappa))


def jp(b: int, n: int, kappa: Optional[int] = None) -> int:
    """Juggling patterns of minimal period n with b balls, throws of size <= kappa"""
    return _jp(b, n, TransferKind(kappa=kappa))


def ss_q(b: int, n: int, kappa: Optional[int] = None) -> Polynomial:
    return _ss(b, n, TransferKind(kappa=kappa, q_weighted=True))


def ms_q(b: int, n: int, kappa: Optional[int] = None) -> Polynomial:
    return _ms(b, n, TransferKind(kappa=kappa, q_weighted=True))


def jp_q(b: int, n: int, kappa: Optional[int] = None) -> Polynomial:
    """jp refined by total crossings: coefficient of q^c counts patterns with c"""
    return _jp(b, n, TransferKind(kappa=kappa, q_weighted=True))


def ss_hat(b: int, n: int, kappa: Optional[int] = None) -> int:
    """ss over patterns where no two balls are thrown to the same height"""
    return _ss(b, n, TransferKind(kappa=kappa, distinct=True))


def ms_hat(b: int, n: int, kappa: Optional[int] = None) -> int:
    return _ms(b, n, TransferKind(kappa=kappa, distinct=True))


def jp_hat(b: int, n: int, kappa: Optional[int] = None) -> int:
    return _jp(b, n, TransferKind(kappa=kappa, distinct=True))


def classic_jp(b: int, n: int) -> int:
    """Patterns with at most one ball per throw: (1/n) sum mu(n/d)((b+1)^d - b^d)"""
    _check_args(b, n, None)
    total = sum(mobius(n // d) * ((b + 1) ** d - b**d) for d in divisors(n))
    quotient, rem = divmod(total, n)
    if rem:
        raise ExactnessError(f"{n} does not divide {total}")
    return quotient


# -- queries ----------------------------------------------------------------


@dataclass(frozen=True)
class CountQuery:
    balls: int
    period: int
    capacity: Optional[int] = None
    q_refined: bool = False
    distinct: bool = False

    def __post_init__(self):
        _check_args(self.balls, self.period, self.capacity)
        if self.q_refined and self.distinct:
            raise UsageError("q-refined and distinct-height counts are separate")

    @property
    def kind(self) -> TransferKind:
        return TransferKind(self.capacity, self.distinct, self.q_refined)


@dataclass(frozen=True)
class CountResult:
    query: CountQuery
    ss: Count
    ms: Count
    jp: Count
    provenance: Tuple[str, ...] = field(default_factory=tuple)


def _provenance(b: int, n: int, kind: TransferKind) -> Tuple[str, ...]:
    kappa = "inf" if kind.kappa is None else str(kind.kappa)
    used = []
    for d in divisors(n):
        if not mobius(n // d):
            continue
        for i in [b] + list(range(_lower_limit(b, kind.kappa), b)):
            how = "diagonal cards" if d == 1 else "matrix power"
            used.append(f"trace({kind.tag} A_{{{i},{kappa}}}^{d}) by {how}")
    return tuple(used)


def count(query: CountQuery) -> CountResult:
    """ss, ms and jp for one query, with the traces that went into them"""
    kind = query.kind
    b, n = query.balls, query.period
    result = CountResult(
        query=query,
        ss=_ss(b, n, kind),
        ms=_ms(b, n, kind),
        jp=_jp(b, n, kind),
        provenance=_provenance(b, n, kind),
    )
    logger.debug(f"count b={b} n={n} {kind}: jp={result.jp}")
    return result


# -- identities -------------------------------------------------------------


@dataclass(frozen=True)
class TraceDecomposition:
    """trace(A_{b,kappa}^n) against sum_i r_{b-i,kappa} ss_{i,kappa}(n)"""

    balls: int
    period: int
    capacity: Optional[int]
    trace: int
    terms: Tuple[Tuple[int, int, int], ...]  # (i, weight, ss_i)

    @property
    def total(self) -> int:
        return sum(w * s for _, w, s in self.terms)

    @property
    def holds(self) -> bool:
        return self.total == self.trace


def trace_decomposition(
    b: int, n: int, kappa: Optional[int] = None
) -> TraceDecomposition:
    """
    Each closed walk is a siteswap on i <= b balls plus a set of unused groups;
    the unused groups stacked above are counted by r_{b-i,kappa}.
    """
    _check_args(b, n, kappa)
    kind = TransferKind(kappa=kappa)
    terms = tuple(
        (i, 1 if i == b else capped_composition_count(b - i, kappa), ss(i, n, kappa))
        for i in range(b + 1)
    )
    return TraceDecomposition(b, n, kappa, trace_power(b, n, kind), terms)


@dataclass(frozen=True)
class TraceIdentityReport:
    balls: int
    trace: int
    partition_formula: int
    ones_formula: int
    period_one_patterns: int
    partitions: int

    @property
    def passed(self) -> bool:
        return (
            self.trace == self.partition_formula == self.ones_formula
            and self.period_one_patterns == self.partitions
        )


def trace_identities(b: int) -> TraceIdentityReport:
    """
    trace(A_b) = p(b) + sum_i 2^(b-i-1) p(i) = sum over partitions of 2^(ones),
    and jp(b, 1) = p(b)
    """
    if b < 0:
        raise UsageError(f"number of balls must be >= 0, got {b}")
    partition_formula = partition_count(b) + sum(
        2 ** (b - i - 1) * partition_count(i) for i in range(b)
    )
    ones_formula = sum(2 ** ones_count(q) for q in unordered_partitions(b))
    return TraceIdentityReport(
        balls=b,
        trace=trace_power(b, 1),
        partition_formula=partition_formula,
        ones_formula=ones_formula,
        period_one_patterns=jp(b, 1),
        partitions=partition_count(b),
    )


# -- tables -----------------------------------------------------------------


@dataclass(frozen=True)
class TableCell:
    balls: int
    period: int
    capacity: Optional[int]
    jp: int


def table(
    b_range: Iterable[int],
    n_range: Iterable[int],
    kappa: Optional[int] = None,
    threads: int = 1,
) -> List[TableCell]:
    """jp over a grid, sorted by (b, n) whatever the worker count"""
    grid = [(b, n) for b in b_range for n in n_range]
    if not grid:
        raise UsageError("empty table range")

    def cell(bn: Tuple[int, int]) -> TableCell:
        b, n = bn
        return TableCell(b, n, kappa, jp(b, n, kappa))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cells = list(pool.map(cell, grid))
    else:
        cells = [cell(bn) for bn in grid]
    logger.info(f"Computed {len(cells)} table cells (kappa={kappa})")
    return sorted(cells, key=lambda c: (c.balls, c.period))
