"""Measures on ranked lists: TREC-style cut-off measures, rank correlations
and the correlation-weighted set similarity.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NoCommonElements, UndefinedMeasure
from .model import Chain, ResultSet
from .sets import StrongMeasureKind, as_set, strong_measure


@dataclass(frozen=True)
class Qrels:
    """Relevance judgments for one topic."""

    relevant: frozenset

    def __post_init__(self):
        object.__setattr__(self, "relevant", frozenset(self.relevant))

    def __len__(self) -> int:
        return len(self.relevant)


class Correlation(enum.Enum):
    SPEARMAN = "spearman"
    KENDALL = "kendall"


def _seq(run) -> tuple:
    if isinstance(run, ResultSet):
        run = run.value
    if isinstance(run, Chain):
        return run.sequence
    return tuple(run)


def _rel(qrels) -> frozenset:
    return qrels.relevant if isinstance(qrels, Qrels) else frozenset(qrels)


def _hits(run, relevant: frozenset, k: int) -> int:
    return sum(1 for x in _seq(run)[:k] if x in relevant)


def precision_at(run, qrels, k: int) -> float:
    """Relevant fraction of the top ``k``; the denominator stays ``k`` for short runs."""
    if k < 1:
        raise ValueError("cut-off must be a positive integer")
    return _hits(run, _rel(qrels), k) / k


def recall_at(run, qrels, k: int) -> float:
    if k < 1:
        raise ValueError("cut-off must be a positive integer")
    relevant = _rel(qrels)
    if not relevant:
        raise UndefinedMeasure("recall is undefined without relevant documents")
    return _hits(run, relevant, k) / len(relevant)


def r_precision(run, qrels) -> float:
    relevant = _rel(qrels)
    if not relevant:
        raise UndefinedMeasure("R-precision is undefined without relevant documents")
    return precision_at(run, relevant, len(relevant))


def average_precision(run, qrels) -> float:
    """Mean precision at the rank of each relevant document; unretrieved ones count 0."""
    relevant = _rel(qrels)
    if not relevant:
        raise UndefinedMeasure("average precision is undefined without relevant documents")
    hits = 0
    total = 0.0
    for r, x in enumerate(_seq(run), start=1):
        if x in relevant:
            hits += 1
            total += hits / r
    return total / len(relevant)


def precision_at_half_recall(run, qrels) -> float:
    """Precision at the rank where half of the relevant documents have been seen.

    Returns 0 when the run never reaches half recall.
    """
    relevant = _rel(qrels)
    if not relevant:
        raise UndefinedMeasure("precision at half recall is undefined without relevant documents")
    needed = (len(relevant) + 1) // 2
    hits = 0
    for r, x in enumerate(_seq(run), start=1):
        if x in relevant:
            hits += 1
            if hits == needed:
                return hits / r
    return 0.0


def common_ranks(c1, c2) -> tuple[list, list]:
    """Ranks 1..n of the shared elements in each chain, aligned by element.

    Ranks are compressed to the induced order of the shared elements. The
    element order of the returned lists follows ``c1``.
    """
    s1, s2 = _seq(c1), _seq(c2)
    shared = set(s1) & set(s2)
    if not shared:
        raise NoCommonElements("the chains share no element")
    order1 = [x for x in s1 if x in shared]
    rank2 = {x: r for r, x in enumerate((x for x in s2 if x in shared), start=1)}
    return list(range(1, len(order1) + 1)), [rank2[x] for x in order1]


def spearman_rho(c1, c2) -> float:
    r1, r2 = common_ranks(c1, c2)
    n = len(r1)
    if n == 1:
        return 1.0
    d2 = sum((a - b) ** 2 for a, b in zip(r1, r2))
    return 1 - 6 * d2 / (n * (n * n - 1))


def _count_inversions(seq: list) -> int:
    if len(seq) < 2:
        return 0
    mid = len(seq) // 2
    left, right = seq[:mid], seq[mid:]
    inv = _count_inversions(left) + _count_inversions(right)
    merged = []
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            inv += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    seq[:] = merged
    return inv


def kendall_tau(c1, c2) -> float:
    """Kendall tau over the shared elements, O(n log n) via inversion counting."""
    _, r2 = common_ranks(c1, c2)
    n = len(r2)
    if n == 1:
        return 1.0
    pairs = n * (n - 1) // 2
    discordant = _count_inversions(list(r2))
    score = pairs - 2 * discordant
    return 2 * score / (n * n - n)


def correlation(kind: Correlation, c1, c2) -> float:
    if kind is Correlation.SPEARMAN:
        return spearman_rho(c1, c2)
    return kendall_tau(c1, c2)


def ordered_combination(
    c1,
    c2,
    base: StrongMeasureKind = StrongMeasureKind.JACCARD,
    kind: Correlation = Correlation.SPEARMAN,
    beta: float = 1.0,
) -> float:
    """Rank correlation on the shared elements times a set similarity on the full sets."""
    rho = correlation(kind, c1, c2)
    return rho * strong_measure(base, as_set(_seq(c1)), as_set(_seq(c2)), beta=beta)
