"""Fuzzy-set similarity for ordered partitions and the composite similarity
for partitions of chains.

An element of class ``i`` gets membership ``phi(i)`` for a strictly
decreasing weighting ``phi``, so agreement in the leading classes weighs
more than agreement further down. Intersection takes the smaller
membership of a shared element and union the larger one.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import UndefinedMeasure
from .model import (
    Chain,
    OrderedPartition,
    PartitionOfChains,
    ResultSet,
    chain_to_ordered_partition,
    vc_to_ordered_partition,
    vc_to_partition,
)
from .partitions import rand_pair


class OrderedKind(enum.Enum):
    JACCARD = "jaccard"
    DICE = "dice"
    COSINE = "cosine"
    OVERLAP_MIN = "overlap_min"
    OVERLAP_MAX = "overlap_max"
    RECALL = "recall"
    PRECISION = "precision"


@dataclass(frozen=True)
class FuzzyWeighting:
    """Membership degree by 1-based class index.

    ``phi`` must be positive, at most 1 at index 1, and strictly decreasing;
    this is checked over the indices actually used.
    """

    phi: Callable[[int], float]
    name: str = "custom"

    @classmethod
    def geometric(cls, ratio: float = 0.5) -> "FuzzyWeighting":
        """``phi(i) = ratio ** (i - 1)``; the default ratio halves each step."""
        if not 0 < ratio < 1:
            raise ValueError(f"ratio must lie strictly between 0 and 1, got {ratio}")
        return cls(lambda i: ratio ** (i - 1), name=f"geometric({ratio:g})")

    def weights(self, count: int) -> list[float]:
        """Weights for classes 1..count, validated."""
        w = [float(self.phi(i)) for i in range(1, count + 1)]
        if w and w[0] > 1:
            raise ValueError(f"phi(1) must not exceed 1, got {w[0]}")
        for i, x in enumerate(w, start=1):
            if not x > 0 or math.isinf(x):
                raise ValueError(f"phi({i}) must be a positive real, got {x}")
            if i > 1 and not x < w[i - 2]:
                raise ValueError(f"phi must be strictly decreasing: phi({i}) >= phi({i - 1})")
        return w


DEFAULT_WEIGHTING = FuzzyWeighting.geometric(0.5)


@dataclass(frozen=True)
class FuzzyCardinalities:
    inter: float
    union: float
    card1: float
    card2: float


def as_ordered(x) -> OrderedPartition:
    if isinstance(x, ResultSet):
        x = x.value
    if isinstance(x, OrderedPartition):
        return x
    if isinstance(x, Chain):
        return chain_to_ordered_partition(x)
    if isinstance(x, PartitionOfChains):
        return vc_to_ordered_partition(x)
    raise TypeError(f"cannot read {type(x).__name__} as an ordered partition")


def _overlaps(ov1: OrderedPartition, ov2: OrderedPartition) -> list[list[int]]:
    col = ov2.class_of
    counts = [[0] * len(ov2.classes) for _ in ov1.classes]
    for i, cls in enumerate(ov1.classes):
        for x in cls:
            j = col.get(x)
            if j is not None:
                counts[i][j - 1] += 1
    return counts


def fuzzy_cardinality(ov, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> float:
    ov = as_ordered(ov)
    phi = w.weights(len(ov.classes))
    total = 0.0
    for i, cls in enumerate(ov.classes):
        total += len(cls) * phi[i]
    return total


def fuzzy_intersection(ov1, ov2, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> float:
    """Sum over class pairs of the overlap size weighted by the later class."""
    ov1, ov2 = as_ordered(ov1), as_ordered(ov2)
    phi = w.weights(max(len(ov1.classes), len(ov2.classes)))
    total = 0.0
    for i, row in enumerate(_overlaps(ov1, ov2)):
        for j, n_ij in enumerate(row):
            if n_ij:
                total += n_ij * phi[max(i, j)]
    return total


def fuzzy_union(ov1, ov2, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> float:
    """Shared elements weighted by the earlier class plus the unshared ones at face value."""
    ov1, ov2 = as_ordered(ov1), as_ordered(ov2)
    phi = w.weights(max(len(ov1.classes), len(ov2.classes)))
    counts = _overlaps(ov1, ov2)
    total = 0.0
    for i, row in enumerate(counts):
        for j, n_ij in enumerate(row):
            if n_ij:
                total += n_ij * phi[min(i, j)]
    for i, cls in enumerate(ov1.classes):
        total += (len(cls) - sum(counts[i])) * phi[i]
    for j, cls in enumerate(ov2.classes):
        total += (len(cls) - sum(row[j] for row in counts)) * phi[j]
    return total


def fuzzy_cardinalities(ov1, ov2, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> FuzzyCardinalities:
    return FuzzyCardinalities(
        inter=fuzzy_intersection(ov1, ov2, w),
        union=fuzzy_union(ov1, ov2, w),
        card1=fuzzy_cardinality(ov1, w),
        card2=fuzzy_cardinality(ov2, w),
    )


def _ratio(num: float, den: float, kind: OrderedKind) -> float:
    if den == 0:
        raise UndefinedMeasure(f"ordered {kind.value} has a zero denominator")
    return num / den


def measure_from_cardinalities(kind: OrderedKind, fc: FuzzyCardinalities) -> float:
    inter, union, c1, c2 = fc.inter, fc.union, fc.card1, fc.card2
    if kind is OrderedKind.JACCARD:
        return _ratio(inter, union, kind)
    if kind is OrderedKind.DICE:
        return _ratio(2 * inter, c1 + c2, kind)
    if kind is OrderedKind.COSINE:
        return _ratio(inter, math.sqrt(c1 * c2), kind)
    if kind is OrderedKind.OVERLAP_MIN:
        return _ratio(inter, min(c1, c2), kind)
    if kind is OrderedKind.OVERLAP_MAX:
        return _ratio(inter, max(c1, c2), kind)
    if kind is OrderedKind.RECALL:
        return _ratio(inter, c2, kind)
    if kind is OrderedKind.PRECISION:
        return _ratio(inter, c1, kind)
    raise ValueError(f"unknown ordered measure: {kind!r}")


def ordered_measure(kind: OrderedKind, ov1, ov2, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> float:
    """Classical set measure evaluated on fuzzy cardinalities.

    For ``RECALL`` the second argument plays the reference (relevant) role.
    """
    return measure_from_cardinalities(kind, fuzzy_cardinalities(ov1, ov2, w))


def ordered_jaccard(ov1, ov2, w: FuzzyWeighting = DEFAULT_WEIGHTING) -> float:
    return ordered_measure(OrderedKind.JACCARD, ov1, ov2, w)


def _as_vc(x) -> PartitionOfChains:
    if isinstance(x, ResultSet):
        x = x.value
    if not isinstance(x, PartitionOfChains):
        raise TypeError(f"expected a partition of chains, got {type(x).__name__}")
    return x


def poset_similarity_template(
    kind: OrderedKind,
    vc1,
    vc2,
    w: FuzzyWeighting = DEFAULT_WEIGHTING,
    strict: bool = False,
) -> float:
    """Rand index of the chain memberships times an ordered measure of the rank layers.

    When the ordered factor is 0 (no shared element) the product is 0 and
    the Rand factor is not evaluated.
    """
    vc1, vc2 = _as_vc(vc1), _as_vc(vc2)
    ordered_factor = ordered_measure(kind, vc_to_ordered_partition(vc1), vc_to_ordered_partition(vc2), w)
    if ordered_factor == 0:
        return 0.0
    return rand_pair(vc_to_partition(vc1), vc_to_partition(vc2), strict=strict) * ordered_factor


def poset_similarity(vc1, vc2, w: FuzzyWeighting = DEFAULT_WEIGHTING, strict: bool = False) -> float:
    return poset_similarity_template(OrderedKind.JACCARD, vc1, vc2, w, strict=strict)
