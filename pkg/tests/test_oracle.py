import pytest

from src.core.cards import Card, Embedding, all_cards, period_one_cards
from src.core.combinatorics import Composition
from src.core.counting import jp, ss, trace_power
from src.core.matrices import TransferKind
from src.evaluation.oracle import (
    CardWalk,
    beat_display,
    enumerate_closed_walks,
    enumerate_patterns,
    enumerate_siteswaps,
    landing_consistent,
    minimal_period,
    parse_siteswap,
    rotation_representative,
    siteswap_display,
    siteswap_multiplicities,
    verify_q_counts,
    walk_to_siteswap,
)
from src.utils.errors import InfeasibleRequest, InvalidCard

C = Composition.of
KINDS = [TransferKind(), TransferKind(kappa=2), TransferKind(distinct=True)]


@pytest.mark.parametrize("b", range(0, 4))
@pytest.mark.parametrize("n", range(1, 5))
def test_walks_count_traces(b, n):
    for kind in KINDS:
        assert len(enumerate_closed_walks(b, n, kind)) == trace_power(b, n, kind)


@pytest.mark.parametrize("b", range(0, 4))
@pytest.mark.parametrize("n", range(1, 5))
def test_siteswaps_and_patterns(b, n):
    assert len(enumerate_siteswaps(b, n)) == ss(b, n)
    assert len(enumerate_patterns(b, n)) == jp(b, n)


@pytest.mark.parametrize("b", range(0, 4))
@pytest.mark.parametrize("n", range(1, 4))
def test_crossing_weights(b, n):
    assert verify_q_counts(b, n).passed


def test_threads_do_not_change_walks():
    assert enumerate_closed_walks(3, 3, threads=4) == enumerate_closed_walks(3, 3)


def test_two_balls_period_one():
    assert enumerate_siteswaps(2, 1) == frozenset({((1, 1),), ((2,),)})
    assert {siteswap_display(s) for s in enumerate_siteswaps(2, 1)} == {"[11]", "2"}


def test_multiplicity_of_unused_balls():
    seen = siteswap_multiplicities(2, 1)
    assert seen[((),)] == (2, 2)
    assert seen[((1,),)] == (1, 1)
    assert seen[((1, 1),)] == (0, 1)
    assert seen[((2,),)] == (0, 1)
    for unused, walks in siteswap_multiplicities(3, 2).values():
        assert walks == (2 ** (unused - 1) if unused else 1)


def test_every_walk_is_landing_consistent():
    for walk in enumerate_closed_walks(3, 3):
        pattern = walk_to_siteswap(walk)
        assert landing_consistent(walk, pattern)
        assert pattern.used_balls + pattern.unused_balls == 3


def test_period_one_cards_give_period_one_patterns():
    patterns = {
        walk_to_siteswap(CardWalk((card,))).display()
        for card in period_one_cards(3).values()
    }
    assert patterns == {"3", "[12]", "[111]"}


def test_unused_ball_walk():
    trivial = Card(C(1), C(1), Embedding.trivial())
    pattern = walk_to_siteswap(CardWalk((trivial, trivial)))
    assert pattern.beats == ((), ())
    assert pattern.unused_balls == 1
    assert pattern.display() == "00"


def test_walks_must_close():
    a, b = all_cards(2)[0], all_cards(2)[-1]
    assert a.right != b.left
    with pytest.raises(InvalidCard):
        CardWalk((a, b))
    with pytest.raises(InvalidCard):
        CardWalk(())


def test_guards():
    with pytest.raises(InfeasibleRequest):
        enumerate_closed_walks(5, 2)
    with pytest.raises(InfeasibleRequest):
        enumerate_closed_walks(2, 7)
    assert len(enumerate_closed_walks(2, 7, force=True)) == trace_power(2, 7)


def test_rotations():
    s = parse_siteswap("531")
    assert rotation_representative(s) == parse_siteswap("153")
    assert minimal_period(parse_siteswap("3131")) == 2
    assert minimal_period(parse_siteswap("441")) == 3


def test_display_and_parse():
    beats = ((1,), (1, 1, 2), (2, 2))
    assert siteswap_display(beats) == "1[112][22]"
    assert parse_siteswap("1[112][22]") == beats
    assert beat_display(()) == "0"
    assert beat_display((4, 12)) == "[4,12]"
    assert beat_display((11,)) == "[11,]"
    assert parse_siteswap("[4,12][11,]0") == ((4, 12), (11,), ())
    with pytest.raises(ValueError):
        parse_siteswap("[12")
    with pytest.raises(ValueError):
        parse_siteswap("3x")
