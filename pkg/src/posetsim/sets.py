"""Strong and weak similarity measures between unordered answer sets.

A strong measure equals 1 only when the two sets are identical. A weak
measure (recall, precision) equals 1 as soon as one set includes the other.
"""
from __future__ import annotations

import enum
import math

from .errors import UndefinedMeasure
from .model import Antichain, Chain, Partition, PartitionOfChains, ResultSet


class StrongMeasureKind(enum.Enum):
    JACCARD = "jaccard"
    DICE = "dice"
    COSINE = "cosine"
    OVERLAP_MIN = "overlap_min"
    OVERLAP_MAX = "overlap_max"
    GENERALIZED_DICE = "generalized_dice"


class WeakMeasureKind(enum.Enum):
    RECALL = "recall"
    PRECISION = "precision"


def as_set(s) -> frozenset:
    """Element set of any answer shape, or of a plain collection of ids."""
    if isinstance(s, ResultSet):
        s = s.value
    if isinstance(s, (Antichain, Chain, Partition, PartitionOfChains)):
        return s.universe
    return frozenset(s)


def strong_measure(kind: StrongMeasureKind, s1, s2, beta: float = 1.0) -> float:
    """Similarity in [0, 1] between two sets; 1 iff the sets are equal.

    ``beta`` only affects ``GENERALIZED_DICE``, which weighs the second set
    (taken as the reference) ``beta**2`` times as much as the first:
    ``(1 + beta**2) |s1 & s2| / (beta**2 |s2| + |s1|)``. Two empty sets have
    similarity 1; one empty set against a non-empty one gives 0.
    """
    a, b = as_set(s1), as_set(s2)
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    inter = len(a & b)
    if kind is StrongMeasureKind.JACCARD:
        return inter / len(a | b)
    if kind is StrongMeasureKind.DICE:
        return 2 * inter / (len(a) + len(b))
    if kind is StrongMeasureKind.COSINE:
        return inter / math.sqrt(len(a) * len(b))
    if kind is StrongMeasureKind.OVERLAP_MIN:
        return inter / min(len(a), len(b))
    if kind is StrongMeasureKind.OVERLAP_MAX:
        return inter / max(len(a), len(b))
    if kind is StrongMeasureKind.GENERALIZED_DICE:
        if beta <= 0:
            raise ValueError("beta must be positive")
        b2 = beta * beta
        return (1 + b2) * inter / (b2 * len(b) + len(a))
    raise ValueError(f"unknown strong measure: {kind!r}")


def weak_measure(kind: WeakMeasureKind, retrieved, relevant, empty: float | None = None) -> float:
    """Recall or precision of ``retrieved`` against ``relevant``.

    When the denominator set is empty the measure is undefined; pass
    ``empty`` to return that value instead of raising.
    """
    got, want = as_set(retrieved), as_set(relevant)
    denom = want if kind is WeakMeasureKind.RECALL else got
    if not denom:
        if empty is None:
            raise UndefinedMeasure(f"{kind.value} is undefined on an empty set")
        return empty
    return len(got & want) / len(denom)


def recall(retrieved, relevant, empty: float | None = None) -> float:
    return weak_measure(WeakMeasureKind.RECALL, retrieved, relevant, empty)


def precision(retrieved, relevant, empty: float | None = None) -> float:
    return weak_measure(WeakMeasureKind.PRECISION, retrieved, relevant, empty)
