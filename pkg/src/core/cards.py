# src/core/cards.py
"""
Multiplex juggling cards.

A card goes from the left composition q = (q_1..q_k) (groups of balls in
landing order before the beat) to the right composition r = (r_1..r_l).
A trivial card has q == r and nothing lands. A nontrivial card lands the
bottom group q_1, sends each remaining group q_j (j >= 2) to right position
i_j (strictly increasing, q_j <= r_{i_j}) and spreads the q_1 caught balls
over the right positions: placement[t] = r_t - (q_j if i_j == t else 0).

Right positions and embedding indices are 1-based, as drawn on the cards.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Dict, Iterator, List, Optional, Tuple

from src.core.combinatorics import (
    Composition,
    UnorderedPartition,
    capped_compositions,
    composition_index,
    compositions,
    unordered_partitions,
)
from src.utils.errors import ExactnessError, InvalidCard

logger = logging.getLogger(__name__)


class EmbeddingKind(Enum):
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class Embedding:
    """How the non-landing groups sit inside the right composition"""

    kind: EmbeddingKind
    indices: Optional[Tuple[int, ...]] = None

    @classmethod
    def trivial(cls) -> "Embedding":
        return cls(EmbeddingKind.TRIVIAL, None)

    @classmethod
    def nontrivial(cls, indices: Tuple[int, ...]) -> "Embedding":
        return cls(EmbeddingKind.NONTRIVIAL, tuple(indices))

    @property
    def is_trivial(self) -> bool:
        return self.kind is EmbeddingKind.TRIVIAL


@dataclass(frozen=True)
class Card:
    left: Composition
    right: Composition
    embedding: Embedding
    placement: Tuple[int, ...] = field(init=False, compare=False)
    crossings: int = field(init=False, compare=False)

    def __post_init__(self):
        q, r = self.left, self.right
        if q.total != r.total:
            raise InvalidCard(f"sides hold different ball counts: {q} -> {r}")

        if self.embedding.is_trivial:
            if q != r:
                raise InvalidCard(f"trivial card needs equal sides: {q} -> {r}")
            object.__setattr__(self, "placement", (0,) * len(r))
            object.__setattr__(self, "crossings", 0)
            return

        idx = self.embedding.indices or ()
        k, width = len(q), len(r)
        if k == 0:
            raise InvalidCard("the empty composition only has the trivial card")
        if len(idx) != k - 1:
            raise InvalidCard(f"need {k - 1} embedding indices, got {idx}")
        if width < k - 1:
            raise InvalidCard(f"right side too short: {q} -> {r}")
        if any(not 1 <= i <= width for i in idx):
            raise InvalidCard(f"indices must lie within 1..{width}: {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise InvalidCard(f"indices must strictly increase: {idx}")

        placement = list(r.parts)
        for j, t in enumerate(idx, start=2):
            placement[t - 1] -= q[j - 1]
        if any(p < 0 for p in placement):
            raise InvalidCard(f"group does not fit its slot: {q} -> {r} via {idx}")
        if sum(placement) != q[0]:
            raise InvalidCard(f"placement {placement} does not spread {q[0]} balls")

        object.__setattr__(self, "placement", tuple(placement))
        object.__setattr__(self, "crossings", _strand_crossings(idx, placement))

    @property
    def is_trivial(self) -> bool:
        return self.embedding.is_trivial

    @property
    def indices(self) -> Optional[Tuple[int, ...]]:
        return self.embedding.indices

    @property
    def balls(self) -> int:
        return self.left.total

    def sort_key(self) -> Tuple:
        idx = () if self.is_trivial else (1,) + self.indices
        return (composition_index(self.left), composition_index(self.right), idx)

    def __str__(self) -> str:
        how = "trivial" if self.is_trivial else f"I={list(self.indices)}"
        return f"{self.left} -> {self.right} {how}"


def _strand_crossings(indices: Tuple[int, ...], placement: List[int]) -> int:
    # one strand per receiving destination; it crosses continuing track j
    # exactly when it lands strictly above that track's destination
    return sum(
        1 for t, p in enumerate(placement, start=1) if p for i_j in indices if t > i_j
    )


def crossing_number(card: Card) -> int:
    """Strand crossings drawn on the card (0 for trivial cards)"""
    return card.crossings


def respects_capacity(card: Card, kappa: Optional[int]) -> bool:
    """Every group on both sides holds at most kappa balls"""
    if kappa is None:
        return True
    return card.left.max_part() <= kappa and card.right.max_part() <= kappa


def has_distinct_heights(card: Card) -> bool:
    """No two caught balls are thrown into the same track"""
    return all(p <= 1 for p in card.placement)


# -- enumeration ------------------------------------------------------------


def cards_into(r: Composition) -> Tuple[Card, ...]:
    """
    All cards whose right side is r

    For each slot t choose how many of its r_t balls were already in the air
    (0..r_t). Taking everything is the trivial card; otherwise the caught
    group is whatever is left over.
    """
    b = r.total
    out = []
    for used in product(*(range(p + 1) for p in r.parts)):
        if used == r.parts:
            out.append(Card(r, r, Embedding.trivial()))
            continue
        caught = b - sum(used)
        left = Composition((caught,) + tuple(u for u in used if u))
        indices = tuple(t for t, u in enumerate(used, start=1) if u)
        out.append(Card(left, r, Embedding.nontrivial(indices)))
    return tuple(out)


def _weak_compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations(range(total + slots - 1), slots - 1):
        edges = (-1,) + bars + (total + slots - 1,)
        yield tuple(hi - lo - 1 for lo, hi in zip(edges, edges[1:]))


def cards_from(q: Composition) -> Tuple[Card, ...]:
    """
    All cards whose left side is q

    The caught q_1 balls open `m` new groups (each gets at least one ball)
    interleaved with the k-1 continuing groups, and may top up continuing
    groups with any number of balls.
    """
    out = [Card(q, q, Embedding.trivial())]
    if not q.parts:
        return tuple(out)
    caught, rest = q[0], q.parts[1:]
    k1 = len(rest)
    for m in range(caught + 1):
        slots = k1 + m
        if slots == 0:
            continue
        for old_slots in combinations(range(slots), k1):
            old = set(old_slots)
            for extra in _weak_compositions(caught - m, slots):
                placement = [e + (0 if s in old else 1) for s, e in enumerate(extra)]
                right = list(placement)
                for j, s in enumerate(old_slots):
                    right[s] += rest[j]
                indices = tuple(s + 1 for s in old_slots)
                out.append(
                    Card(q, Composition(tuple(right)), Embedding.nontrivial(indices))
                )
    return tuple(out)


def cards_between(left: Composition, right: Composition) -> Tuple[Card, ...]:
    """All cards for one (left, right) pair, i.e. one transfer matrix entry"""
    if left.total != right.total:
        return ()
    out = []
    if left == right:
        out.append(Card(left, right, Embedding.trivial()))
    if not left.parts:
        return tuple(out)
    rest = left.parts[1:]
    width = len(right)

    # backtracking over increasing index choices with rest[j] <= right[i_j]
    stack: List[Tuple[int, Tuple[int, ...]]] = [(0, ())]
    while stack:
        j, chosen = stack.pop()
        if j == len(rest):
            out.append(Card(left, right, Embedding.nontrivial(chosen)))
            continue
        start = chosen[-1] + 1 if chosen else 1
        # leave room for the groups still to place
        last = width - (len(rest) - j - 1)
        for t in range(last, start - 1, -1):
            if rest[j] <= right[t - 1]:
                stack.append((j + 1, chosen + (t,)))
    # nontrivial cards need at least one caught ball, which sum balance guarantees
    return tuple(sorted(out, key=Card.sort_key))


@lru_cache(maxsize=32)
def all_cards(b: int) -> Tuple[Card, ...]:
    """Every card for b balls, in (left, right, indices) canonical order"""
    cards = [c for r in compositions(b) for c in cards_into(r)]
    cards.sort(key=Card.sort_key)
    logger.debug(f"Enumerated {len(cards)} cards for b={b}")
    return tuple(cards)


def filtered_cards(
    b: int, kappa: Optional[int] = None, distinct: bool = False
) -> Tuple[Card, ...]:
    """Cards for b balls under the capacity and distinct-height filters"""
    if kappa is None:
        rights = compositions(b)
    else:
        rights = capped_compositions(b, kappa)
    cards = []
    for r in rights:
        for c in cards_into(r):
            if not respects_capacity(c, kappa):
                continue
            if distinct and not has_distinct_heights(c):
                continue
            cards.append(c)
    cards.sort(key=Card.sort_key)
    return tuple(cards)


# -- closed forms -----------------------------------------------------------


def cards_into_count(r: Composition) -> int:
    """Number of cards into r: prod(r_i + 1)"""
    return prod(p + 1 for p in r.parts)


def cards_from_count(q: Composition) -> int:
    """Number of cards out of q: 1 + (q1+2k-2)/(q1+k-1) * C(q1+k-1, k-1) * 2^(q1-1)"""
    if not q.parts:
        return 1
    q1, k = q[0], len(q)
    numerator = (q1 + 2 * k - 2) * comb(q1 + k - 1, k - 1) * 2 ** (q1 - 1)
    count, rem = divmod(numerator, q1 + k - 1)
    if rem:
        raise ExactnessError(f"card count for {q} is not an integer")
    return 1 + count


@lru_cache(maxsize=None)
def card_count(b: int) -> int:
    """a_b as the sum over right sides of prod(r_i + 1)"""
    return sum(cards_into_count(r) for r in compositions(b))


@lru_cache(maxsize=None)
def card_count_by_first_part(b: int) -> int:
    """a_b = sum_{j=1}^{b} (j+1) a_{b-j}, grouping right sides by first part"""
    if b == 0:
        return 1
    return sum((j + 1) * card_count_by_first_part(b - j) for j in range(1, b + 1))


def card_count_recurrence_check(b_max: int) -> bool:
    """a_b == 4 a_{b-1} - 2 a_{b-2} for 3 <= b <= b_max"""
    return all(
        card_count(b) == 4 * card_count(b - 1) - 2 * card_count(b - 2)
        for b in range(3, b_max + 1)
    )


def capped_card_count(
    b: int, kappa: Optional[int] = None, distinct: bool = False
) -> int:
    """
    Number of cards with every group on both sides at most kappa

    Linear DP over right sides built part by part. State is (balls so far,
    balls freshly thrown so far); a card is nontrivial exactly when the
    thrown total (its caught group q_1) is positive, and q_1 <= kappa keeps
    the left side capped too.
    """
    cap = b if kappa is None else min(kappa, b)
    if b == 0:
        return 1
    # f[s][d]: partial right sides summing to s with d thrown balls
    f = [[0] * (cap + 1) for _ in range(b + 1)]
    f[0][0] = 1
    for s in range(b):
        for d in range(cap + 1):
            ways = f[s][d]
            if not ways:
                continue
            for part in range(1, min(cap, b - s) + 1):
                top = 1 if distinct else part
                for thrown in range(0, min(top, cap - d) + 1):
                    f[s + part][d + thrown] += ways
    trivial = f[b][0]
    return trivial + sum(f[b][d] for d in range(1, cap + 1))


# -- period one ----------------------------------------------------------


def period_one_card(partition: UnorderedPartition) -> Card:
    """
    The card repeating into a period-one pattern for an unordered partition

    Groups are stacked largest first; each group drops one slot and the caught
    group tops up the differences, the top slot receiving a fresh group.
    """
    q = Composition(partition.parts)
    k = len(q)
    if k == 0:
        return Card(q, q, Embedding.trivial())
    return Card(q, q, Embedding.nontrivial(tuple(range(1, k))))


def period_one_cards(b: int) -> Dict[UnorderedPartition, Card]:
    return {p: period_one_card(p) for p in unordered_partitions(b)}
