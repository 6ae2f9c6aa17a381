"""Comparison of two partitions (clusterings) of the same elements.

Every pair of elements falls in one of four cells:

* ``a`` -- together in both partitions
* ``b`` -- apart in the first, together in the second
* ``c`` -- together in the first, apart in the second
* ``d`` -- apart in both

The counts are obtained from the contingency table; ``rand_relational`` and
``jaccard_relational`` evaluate the same quantities from the 0/1 adjacency
matrices instead.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooFewElements, UndefinedMeasure
from .model import Partition
from .relational import RelationKind, adjacency, common_universe, contingency


@dataclass(frozen=True)
class PairCensus:
    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        if self.a + self.b + self.c + self.d != self.n * (self.n - 1) // 2:
            raise ValueError("pair counts must add up to n(n-1)/2")

    @property
    def agreements(self) -> int:
        return self.a + self.d

    @property
    def disagreements(self) -> int:
        return self.b + self.c

    def astuple(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


def _pairs(x) -> int:
    return int(x) * (int(x) - 1) // 2


def pair_census(v1: Partition, v2: Partition, strict: bool = False) -> PairCensus:
    table = contingency(v1, v2, strict=strict)
    n = table.total
    both = sum(_pairs(x) for x in table.counts.ravel())
    together1 = sum(_pairs(x) for x in table.row_sums)
    together2 = sum(_pairs(x) for x in table.col_sums)
    a = both
    c = together1 - both
    b = together2 - both
    d = _pairs(n) - a - b - c
    return PairCensus(a, b, c, d, n)


def _census_min2(v1, v2, strict):
    census = pair_census(v1, v2, strict=strict)
    if census.n < 2:
        raise TooFewElements(f"need at least 2 shared elements, got {census.n}")
    return census


def rand_pair(v1: Partition, v2: Partition, strict: bool = False) -> float:
    """Fraction of element pairs on which the two partitions agree."""
    census = _census_min2(v1, v2, strict)
    return census.agreements / _pairs(census.n)


def rand_asymmetric(v1: Partition, v2: Partition, strict: bool = False) -> float:
    """Rand variant that reaches 1 exactly when ``v1`` refines ``v2``.

    Pairs split by ``v1`` but joined by ``v2`` are not held against ``v1``.
    """
    census = _census_min2(v1, v2, strict)
    return (census.agreements + census.b) / _pairs(census.n)


def jaccard_partition(v1: Partition, v2: Partition, strict: bool = False, undefined: float | None = None) -> float:
    """Pairs together in both over pairs together in at least one.

    Undefined when both partitions are all singletons; ``undefined`` then
    supplies the value to return instead of raising.
    """
    census = pair_census(v1, v2, strict=strict)
    denom = census.a + census.b + census.c
    if denom == 0:
        if undefined is None:
            raise UndefinedMeasure("no pair is co-clustered in either partition")
        return undefined
    return census.a / denom


def _matrices(v1, v2, strict):
    v1, v2 = common_universe(v1, v2, strict=strict)
    order = sorted(v1.universe)
    m1 = adjacency(v1, RelationKind.SAME_CLUSTER, order).bits.astype(np.int64)
    m2 = adjacency(v2, RelationKind.SAME_CLUSTER, order).bits.astype(np.int64)
    return m1, m2, len(order)


def rand_relational(v1: Partition, v2: Partition, strict: bool = False) -> float:
    """Agreement rate over all ordered pairs, loops included, from adjacency matrices.

    Related to :func:`rand_pair` by ``(1 + (n - 1) * rand_pair) / n``.
    """
    m1, m2, n = _matrices(v1, v2, strict)
    if n < 2:
        raise TooFewElements(f"need at least 2 shared elements, got {n}")
    agree = int((m1 * m2).sum() + ((1 - m1) * (1 - m2)).sum())
    return agree / (n * n)


def jaccard_relational(v1: Partition, v2: Partition, strict: bool = False, undefined: float | None = None) -> float:
    """:func:`jaccard_partition` evaluated from adjacency matrix sums."""
    m1, m2, n = _matrices(v1, v2, strict)
    s12 = int((m1 * m2).sum())
    s1 = int(m1.sum())
    s2 = int(m2.sum())
    denom = s1 + s2 - s12 - n
    if denom == 0:
        if undefined is None:
            raise UndefinedMeasure("no pair is co-clustered in either partition")
        return undefined
    return (s12 - n) / denom


def refines(v1: Partition, v2: Partition) -> bool:
    """True when every class of ``v1`` lies inside a class of ``v2``."""
    cls2 = v2.class_of
    for cls in v1.classes:
        targets = {cls2.get(x) for x in cls}
        if len(targets) != 1 or None in targets:
            return False
    return True
