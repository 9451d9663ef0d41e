# src/evaluation/oracle.py
"""
Brute-force oracle: closed card walks enumerated directly and transcoded to
siteswaps, to check the trace formulas on small cases.

Positions are 1-based slots of the state before a beat; slot 1 lands next.
"""

import logging
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.core.cards import Card, cards_into
from src.core.combinatorics import capped_compositions, divisors
from src.core.matrices import TransferKind, build_transfer, mat_pow, trace
from src.core.polynomial import Polynomial, poly
from src.utils.errors import ExactnessError, InvalidCard, check_guard

logger = logging.getLogger(__name__)

Beat = Tuple[int, ...]
Siteswap = Tuple[Beat, ...]

DEFAULT_MAX_BALLS = 4
DEFAULT_MAX_PERIOD = 6


@dataclass(frozen=True)
class CardWalk:
    """n cards placed side by side, each right side feeding the next left side"""

    cards: Tuple[Card, ...]

    def __post_init__(self):
        cards = tuple(self.cards)
        if not cards:
            raise InvalidCard("a walk needs at least one card")
        for t, card in enumerate(cards):
            nxt = cards[(t + 1) % len(cards)]
            if card.right != nxt.left:
                raise InvalidCard(f"card {t} ends at {card.right}, next is {nxt.left}")
        object.__setattr__(self, "cards", cards)

    @property
    def period(self) -> int:
        return len(self.cards)

    @property
    def base(self) -> int:
        return self.cards[0].balls


@dataclass(frozen=True)
class SiteswapPattern:
    beats: Siteswap
    used_balls: int
    unused_balls: int

    @property
    def period(self) -> int:
        return len(self.beats)

    def display(self) -> str:
        return siteswap_display(self.beats)


# -- enumeration -----------------------------------------------------------


def _cards_by_left(b: int, kind: TransferKind) -> Dict:
    vertices = set(capped_compositions(b, kind.kappa))
    out: Dict = defaultdict(list)
    for r in capped_compositions(b, kind.kappa):
        for card in cards_into(r):
            if card.left in vertices and kind.admits(card):
                out[card.left].append(card)
    for cards in out.values():
        cards.sort(key=Card.sort_key)
    return out


def _walks_from(first: Card, n: int, by_left: Dict) -> List[CardWalk]:
    walks: List[CardWalk] = []
    path = [first]

    def extend():
        if len(path) == n:
            if path[-1].right == first.left:
                walks.append(CardWalk(tuple(path)))
            return
        for card in by_left.get(path[-1].right, ()):
            path.append(card)
            extend()
            path.pop()

    extend()
    return walks


def enumerate_closed_walks(
    b: int,
    n: int,
    kind: TransferKind = TransferKind(),
    *,
    threads: int = 1,
    force: bool = False,
    max_balls: int = DEFAULT_MAX_BALLS,
    max_period: int = DEFAULT_MAX_PERIOD,
) -> List[CardWalk]:
    """All closed walks of length n; there are trace(A^n) of them"""
    check_guard("max_oracle_balls", b, max_balls, force, "walks grow like trace(A^n)")
    check_guard("max_oracle_period", n, max_period, force)
    if n < 1:
        raise ValueError(f"period must be >= 1, got {n}")
    by_left = _cards_by_left(b, kind)
    firsts = sorted((c for cards in by_left.values() for c in cards), key=Card.sort_key)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda c: _walks_from(c, n, by_left), firsts))
    else:
        chunks = [_walks_from(c, n, by_left) for c in firsts]
    walks = [w for chunk in chunks for w in chunk]
    logger.debug(f"{len(walks)} closed walks for b={b}, n={n}, {kind}")
    return walks


# -- transcoding -----------------------------------------------------------


def _landing_beat(walk: CardWalk, beat: int, position: int) -> Optional[int]:
    """
    Beat at which the group sitting at `position` before `beat` lands, or None

    The walk repeats, so (beat mod n, position) determines the future; seeing
    a state twice means the group is never caught.
    """
    n = walk.period
    seen = set()
    while True:
        state = (beat % n, position)
        if state in seen:
            return None
        seen.add(state)
        card = walk.cards[beat % n]
        if not card.is_trivial:
            if position == 1:
                return beat
            position = card.indices[position - 2]
        beat += 1


def walk_to_siteswap(walk: CardWalk) -> SiteswapPattern:
    """Throw heights per beat, plus how many balls never take part"""
    beats: List[Beat] = []
    for s, card in enumerate(walk.cards):
        heights: List[int] = []
        for t, thrown in enumerate(card.placement, start=1):
            if not thrown:
                continue
            landed = _landing_beat(walk, s + 1, t)
            if landed is None:
                raise ExactnessError(f"ball thrown at beat {s} never lands in {walk}")
            heights.extend([landed - s] * thrown)
        beats.append(tuple(sorted(heights)))

    start = walk.cards[0].left
    unused = sum(
        size
        for pos, size in enumerate(start.parts, start=1)
        if _landing_beat(walk, 0, pos) is None
    )
    return SiteswapPattern(tuple(beats), walk.base - unused, unused)


def landing_consistent(walk: CardWalk, pattern: SiteswapPattern) -> bool:
    """Balls landing on each beat add up to the group that card catches"""
    n = walk.period
    landing = [0] * n
    for s, beat in enumerate(pattern.beats):
        for h in beat:
            landing[(s + h) % n] += 1
    caught = [0 if c.is_trivial else c.left[0] for c in walk.cards]
    return landing == caught


def walk_crossings(walk: CardWalk) -> int:
    return sum(card.crossings for card in walk.cards)


# -- siteswap sets -----------------------------------------------------------


def enumerate_siteswaps(
    b: int, n: int, kind: TransferKind = TransferKind(), **guards
) -> FrozenSet[Siteswap]:
    """Distinct period-n siteswaps using all b balls; there are ss(b, n)"""
    found = set()
    for walk in enumerate_closed_walks(b, n, kind, **guards):
        pattern = walk_to_siteswap(walk)
        if pattern.unused_balls == 0:
            found.add(pattern.beats)
    return frozenset(found)


def rotations(beats: Siteswap) -> List[Siteswap]:
    return [beats[k:] + beats[:k] for k in range(len(beats))]


def rotation_representative(beats: Siteswap) -> Siteswap:
    """Lexicographically least rotation"""
    return min(rotations(beats))


def minimal_period(beats: Siteswap) -> int:
    n = len(beats)
    for d in divisors(n):
        if beats[d:] + beats[:d] == beats:
            return d
    return n


def enumerate_patterns(
    b: int, n: int, kind: TransferKind = TransferKind(), **guards
) -> FrozenSet[Siteswap]:
    """Rotation classes of minimal period n; there are jp(b, n)"""
    return frozenset(
        rotation_representative(s)
        for s in enumerate_siteswaps(b, n, kind, **guards)
        if minimal_period(s) == n
    )


def siteswap_multiplicities(
    b: int, n: int, **guards
) -> Dict[Siteswap, Tuple[int, int]]:
    """For each siteswap seen on b balls: (unused balls, number of walks)"""
    seen: Dict[Siteswap, int] = {}
    walks: Counter = Counter()
    for walk in enumerate_closed_walks(b, n, **guards):
        pattern = walk_to_siteswap(walk)
        seen[pattern.beats] = pattern.unused_balls
        walks[pattern.beats] += 1
    return {s: (seen[s], walks[s]) for s in seen}


@dataclass(frozen=True)
class QCountCheck:
    balls: int
    period: int
    from_walks: Polynomial
    from_matrix: Polynomial

    @property
    def passed(self) -> bool:
        return self.from_walks == self.from_matrix


def verify_q_counts(b: int, n: int, **guards) -> QCountCheck:
    """sum over walks of q^crossings against trace(A_b(q)^n)"""
    exponents = Counter(
        walk_crossings(w) for w in enumerate_closed_walks(b, n, **guards)
    )
    coeffs = [0] * (max(exponents, default=-1) + 1)
    for e, c in exponents.items():
        coeffs[e] = c
    matrix = trace(mat_pow(build_transfer(b, TransferKind(q_weighted=True)), n))
    return QCountCheck(b, n, poly(coeffs), matrix)


# -- notation --------------------------------------------------------------


def beat_display(beat: Beat) -> str:
    if not beat:
        return "0"
    if any(h >= 10 for h in beat):
        # a lone height keeps its comma so [11,] never reads as [11]
        body = ",".join(map(str, beat))
        return f"[{body},]" if len(beat) == 1 else f"[{body}]"
    if len(beat) == 1:
        return str(beat[0])
    return "[" + "".join(map(str, beat)) + "]"


def siteswap_display(beats: Sequence[Beat]) -> str:
    """Singletons bare, multiplexes bracketed, empty beats as 0"""
    return "".join(beat_display(b) for b in beats)


def parse_siteswap(text: str) -> Siteswap:
    """Inverse of siteswap_display; heights >= 10 need the comma form"""
    beats: List[Beat] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            close = text.find("]", i)
            if close < 0:
                raise ValueError(f"unclosed bracket in {text!r}")
            body = text[i + 1 : close]
            parts = [p for p in body.split(",") if p] if "," in body else list(body)
            if not parts or any(not p.strip().isdigit() for p in parts):
                raise ValueError(f"bad multiplex {body!r} in {text!r}")
            beats.append(tuple(sorted(int(p) for p in parts if int(p))))
            i = close + 1
        elif ch.isdigit():
            beats.append(() if ch == "0" else (int(ch),))
            i += 1
        else:
            raise ValueError(f"unexpected {ch!r} in siteswap {text!r}")
    return tuple(beats)
