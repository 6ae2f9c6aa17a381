import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetsim.errors import UndefinedMeasure
from posetsim.model import Antichain
from posetsim.sets import StrongMeasureKind, WeakMeasureKind, precision, recall, strong_measure, weak_measure

STRONG = list(StrongMeasureKind)
small_sets = st.frozensets(st.sampled_from("ABCDEFGH"), max_size=8)


def test_jaccard_example():
    assert strong_measure(StrongMeasureKind.JACCARD, Antichain(frozenset("ABC")), Antichain(frozenset("BCD"))) == 0.5


@pytest.mark.parametrize(
    "kind, expected",
    [
        (StrongMeasureKind.DICE, 4 / 6),
        (StrongMeasureKind.COSINE, 2 / 3),
        (StrongMeasureKind.OVERLAP_MIN, 2 / 3),
        (StrongMeasureKind.OVERLAP_MAX, 2 / 3),
        (StrongMeasureKind.GENERALIZED_DICE, 4 / 6),
    ],
)
def test_other_kinds_on_example(kind, expected):
    assert strong_measure(kind, "ABC", "BCD") == pytest.approx(expected, abs=1e-15)


def test_overlap_unequal_sizes():
    assert strong_measure(StrongMeasureKind.OVERLAP_MIN, "AB", "ABCD") == 1.0
    assert strong_measure(StrongMeasureKind.OVERLAP_MAX, "AB", "ABCD") == 0.5


def test_generalized_dice_beta():
    # beta = 2: (1 + 4) * 1 / (4 * |s2| + |s1|) with |s1| = 1, |s2| = 2
    assert strong_measure(StrongMeasureKind.GENERALIZED_DICE, "A", "AB", beta=2) == pytest.approx(5 / 9)
    with pytest.raises(ValueError):
        strong_measure(StrongMeasureKind.GENERALIZED_DICE, "A", "AB", beta=0)


@pytest.mark.parametrize("kind", STRONG)
def test_identity_and_disjoint(kind):
    assert strong_measure(kind, "ABC", "ABC") == 1.0
    assert strong_measure(kind, "AB", "CD") == 0.0


@pytest.mark.parametrize("kind", STRONG)
def test_empty_conventions(kind):
    assert strong_measure(kind, "", "") == 1.0
    assert strong_measure(kind, "", "A") == 0.0


def test_weak_example():
    retrieved, relevant = frozenset("ABCD"), frozenset("AB")
    assert recall(retrieved, relevant) == 1.0
    assert precision(retrieved, relevant) == 0.5
    assert recall("AB", "AB") == precision("AB", "AB") == 1.0
    assert recall("AB", "CD") == precision("AB", "CD") == 0.0


def test_weak_undefined():
    with pytest.raises(UndefinedMeasure):
        recall("AB", "")
    with pytest.raises(UndefinedMeasure):
        precision("", "AB")
    assert weak_measure(WeakMeasureKind.RECALL, "AB", "", empty=0.0) == 0.0


@given(small_sets, small_sets, st.sampled_from(STRONG))
def test_strong_symmetric_and_bounded(a, b, kind):
    x = strong_measure(kind, a, b)
    if kind is not StrongMeasureKind.GENERALIZED_DICE:
        assert x == strong_measure(kind, b, a)
    assert 0.0 <= x <= 1.0
    if kind is StrongMeasureKind.OVERLAP_MIN:
        # reaches 1 on nested sets, so it is not strong
        assert (x == 1.0) == (a == b or (bool(a) and bool(b) and (a <= b or b <= a)))
    else:
        assert (x == 1.0) == (a == b)


@given(small_sets, small_sets)
def test_overlap_order_and_dice_special_case(a, b):
    assert strong_measure(StrongMeasureKind.OVERLAP_MAX, a, b) <= strong_measure(StrongMeasureKind.OVERLAP_MIN, a, b)
    assert strong_measure(StrongMeasureKind.GENERALIZED_DICE, a, b, beta=1.0) == strong_measure(StrongMeasureKind.DICE, a, b)


@given(small_sets.filter(bool), small_sets.filter(bool))
def test_weak_duality(x, y):
    assert recall(x, y) == precision(y, x)
    assert (recall(x, y) == 1.0) == (y <= x)
    assert (precision(x, y) == 1.0) == (x <= y)
