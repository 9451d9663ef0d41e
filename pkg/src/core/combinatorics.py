# src/core/combinatorics.py
"""
Compositions (ordered partitions), unordered partitions and the small
number-theoretic helpers the counting code needs.

Canonical composition order: graded by number of parts ascending, then
reverse-lexicographic on the parts, e.g. for b = 4

    (4), (3,1), (2,2), (1,3), (2,1,1), (1,2,1), (1,1,2), (1,1,1,1)
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, Optional, Sequence, Tuple

import sympy
from sympy.functions.combinatorial.numbers import partition
from sympy.utilities.iterables import partitions

from src.utils.errors import InvalidComposition


@dataclass(frozen=True)
class Composition:
    """An ordered partition of `total` into positive parts"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise InvalidComposition(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, idx: int) -> int:
        return self.parts[idx]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def max_part(self) -> int:
        return max(self.parts, default=0)


@dataclass(frozen=True)
class UnorderedPartition:
    """A weakly decreasing sequence of positive parts"""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise InvalidComposition(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidComposition(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _cuts_to_parts(b: int, cuts: Sequence[int]) -> Tuple[int, ...]:
    edges = (0,) + tuple(cuts) + (b,)
    return tuple(hi - lo for lo, hi in zip(edges, edges[1:]))


def iter_compositions(b: int, kappa: Optional[int] = None) -> Iterator[Composition]:
    """Yield compositions of b in canonical order, optionally with parts <= kappa"""
    if b < 0:
        raise InvalidComposition(f"b must be nonnegative, got {b}")
    if b == 0:
        yield Composition()
        return
    for k in range(1, b + 1):
        if kappa is not None and k * kappa < b:
            continue
        # cut sets in lex order give parts in lex order; walk them backwards
        for cuts in reversed(list(combinations(range(1, b), k - 1))):
            parts = _cuts_to_parts(b, cuts)
            if kappa is None or max(parts) <= kappa:
                yield Composition(parts)


@lru_cache(maxsize=64)
def compositions(b: int) -> Tuple[Composition, ...]:
    """All 2^(b-1) compositions of b (one for b = 0) in canonical order"""
    return tuple(iter_compositions(b))


@lru_cache(maxsize=256)
def capped_compositions(b: int, kappa: Optional[int] = None) -> Tuple[Composition, ...]:
    """Compositions of b with every part <= kappa; kappa None means unbounded"""
    if kappa is not None and kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    if kappa is None or kappa >= b:
        return compositions(b)
    return tuple(iter_compositions(b, kappa))


def compositions_by_first_part(b: int) -> Dict[int, Tuple[Composition, ...]]:
    """Group compositions of b by their first part"""
    groups: Dict[int, list] = {}
    for c in compositions(b):
        groups.setdefault(c.parts[0] if c.parts else 0, []).append(c)
    return {j: tuple(cs) for j, cs in groups.items()}


def capped_composition_count(i: int, kappa: Optional[int] = None) -> int:
    """r_{i,kappa}: compositions of i with parts <= kappa (first-part recurrence)"""
    if i < 0:
        return 0
    kappa = i if kappa is None else kappa
    r = [1] + [0] * i
    for s in range(1, i + 1):
        r[s] = sum(r[s - j] for j in range(1, min(kappa, s) + 1))
    return r[i]


def _count_with_parts(total: int, parts: int) -> int:
    # compositions of `total` into exactly `parts` positive parts
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts:
        return 0
    return comb(total - 1, parts - 1)


def composition_index(c: Composition) -> int:
    """Position of c inside compositions(c.total)"""
    b, k = c.total, len(c)
    if b == 0:
        return 0
    index = sum(comb(b - 1, j - 1) for j in range(1, k))
    remaining = b
    for pos, part in enumerate(c.parts[:-1]):
        slots_after = k - pos - 1
        # reverse-lex: every larger part at this position comes first
        for larger in range(part + 1, remaining - slots_after + 1):
            index += _count_with_parts(remaining - larger, slots_after)
        remaining -= part
    return index


def composition_from_index(b: int, index: int) -> Composition:
    """Inverse of composition_index"""
    total = 1 if b == 0 else 2 ** (b - 1)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range for b={b}")
    if b == 0:
        return Composition()
    k = 1
    while index >= comb(b - 1, k - 1):
        index -= comb(b - 1, k - 1)
        k += 1
    parts = []
    remaining = b
    for pos in range(k - 1):
        slots_after = k - pos - 1
        part = remaining - slots_after
        while True:
            block = _count_with_parts(remaining - part, slots_after)
            if index < block:
                break
            index -= block
            part -= 1
        parts.append(part)
        remaining -= part
    parts.append(remaining)
    return Composition(tuple(parts))


def iter_unordered_partitions(b: int) -> Iterator[UnorderedPartition]:
    """Partitions of b, largest first part first"""
    if b < 0:
        raise InvalidComposition(f"b must be nonnegative, got {b}")
    if b == 0:
        yield UnorderedPartition()
        return
    # sympy reuses the multiplicity dict between yields
    for multiplicities in partitions(b):
        parts = sorted(
            (k for k, m in multiplicities.items() for _ in range(m)), reverse=True
        )
        yield UnorderedPartition(tuple(parts))


@lru_cache(maxsize=64)
def unordered_partitions(b: int) -> Tuple[UnorderedPartition, ...]:
    return tuple(iter_unordered_partitions(b))


@lru_cache(maxsize=None)
def partition_count(b: int) -> int:
    """p(b); 0 for negative b"""
    if b < 0:
        return 0
    return int(partition(b))


def ones_count(q: UnorderedPartition) -> int:
    """o(q): number of parts equal to 1"""
    return sum(1 for p in q.parts if p == 1)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    return int(sympy.mobius(n))


def divisors(n: int) -> Tuple[int, ...]:
    """Positive divisors of n in increasing order"""
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    return tuple(int(d) for d in sympy.divisors(n))
