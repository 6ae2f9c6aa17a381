"""Brute-force reference implementations.

These deliberately re-derive each quantity from first principles (pair
enumeration, per-element memberships, double loops) and share no code with
the measure modules. They back the test suite and ``posetsim compare --verify``.
"""
from __future__ import annotations

from itertools import combinations

from .model import Chain, ResultSet
from .ordered import FuzzyCardinalities, FuzzyWeighting
from .partitions import PairCensus
from .errors import NoCommonElements


def _lookup(classes) -> dict:
    where = {}
    for idx, cls in enumerate(classes):
        for x in cls:
            where[x] = idx
    return where


def pairs_bruteforce(v1, v2) -> PairCensus:
    """Classify every unordered pair of shared elements into a/b/c/d."""
    g1, g2 = _lookup(v1.classes), _lookup(v2.classes)
    shared = sorted(set(g1) & set(g2))
    a = b = c = d = 0
    for x, y in combinations(shared, 2):
        same1 = g1[x] == g1[y]
        same2 = g2[x] == g2[y]
        if same1 and same2:
            a += 1
        elif same2:
            b += 1
        elif same1:
            c += 1
        else:
            d += 1
    return PairCensus(a, b, c, d, len(shared))


def _membership(ov, phi) -> dict:
    return {x: phi(idx + 1) for idx, cls in enumerate(ov.classes) for x in cls}


def fuzzy_bruteforce(ov1, ov2, w: FuzzyWeighting) -> FuzzyCardinalities:
    """Fuzzy cardinalities from per-element min/max memberships."""
    m1 = _membership(ov1, w.phi)
    m2 = _membership(ov2, w.phi)
    inter = union = card1 = card2 = 0.0
    for x in sorted(set(m1) | set(m2)):
        p, q = m1.get(x, 0.0), m2.get(x, 0.0)
        inter += min(p, q)
        union += max(p, q)
        card1 += p
        card2 += q
    return FuzzyCardinalities(inter, union, card1, card2)


def _sequence(c):
    if isinstance(c, ResultSet):
        c = c.value
    return c.sequence if isinstance(c, Chain) else tuple(c)


def tau_bruteforce(c1, c2) -> float:
    """Kendall tau by scoring every pair of shared elements +1 or -1."""
    s1, s2 = _sequence(c1), _sequence(c2)
    pos1 = {x: i for i, x in enumerate(s1)}
    pos2 = {x: i for i, x in enumerate(s2)}
    shared = [x for x in s1 if x in pos2]
    n = len(shared)
    if n == 0:
        raise NoCommonElements("the chains share no element")
    if n == 1:
        return 1.0
    score = 0
    for i in range(n):
        for j in range(n):
            if i < j:
                x, y = shared[i], shared[j]
                same = (pos1[x] < pos1[y]) == (pos2[x] < pos2[y])
                score += 1 if same else -1
    return 2 * score / (n * n - n)


def spearman_bruteforce(c1, c2) -> float:
    """Spearman rho by re-ranking shared elements independently in each chain."""
    s1, s2 = _sequence(c1), _sequence(c2)
    shared = set(s1) & set(s2)
    if not shared:
        raise NoCommonElements("the chains share no element")
    r1 = {x: r for r, x in enumerate(sorted(shared, key=s1.index), start=1)}
    r2 = {x: r for r, x in enumerate(sorted(shared, key=s2.index), start=1)}
    n = len(shared)
    if n == 1:
        return 1.0
    d2 = sum((r1[x] - r2[x]) ** 2 for x in shared)
    return 1 - 6 * d2 / (n * (n * n - 1))
