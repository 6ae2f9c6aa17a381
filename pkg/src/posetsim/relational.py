"""Binary relations over answer sets as 0/1 adjacency matrices.

Loops are always encoded as 1 so every matrix is purely binary, including
the strict relation ``GREATER_THAN``. Rows and columns follow an explicit
element order, lexicographic unless the caller supplies one.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import OrderMismatch, UniverseMismatch, UnknownElement, UnsupportedRelation
from .model import (
    Antichain,
    Chain,
    OrderedPartition,
    Partition,
    PartitionOfChains,
    ResultSet,
    restrict,
)


class RelationKind(enum.Enum):
    SAME_CLUSTER = "same_cluster"
    GREATER_THAN = "greater_than"
    SAME_RANK = "same_rank"
    GREATER_OR_EQUAL = "greater_or_equal"

    @classmethod
    def parse(cls, name: str) -> "RelationKind":
        key = name.strip().lower().replace("-", "_")
        aliases = {"in": "same_cluster", "gt": "greater_than", "rank": "same_rank", "ge": "greater_or_equal"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise UnsupportedRelation(f"unknown relation kind: {name!r}") from None


# DOT edge style per relation: plain, dashed and dotted arrows.
EDGE_STYLE = {
    RelationKind.SAME_CLUSTER: "solid",
    RelationKind.GREATER_THAN: "dashed",
    RelationKind.SAME_RANK: "dotted",
    RelationKind.GREATER_OR_EQUAL: "bold",
}


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    order: tuple
    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=np.uint8)
        n = len(self.order)
        if bits.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got {bits.shape}")
        if np.any(bits > 1):
            raise ValueError("adjacency entries must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "bits", bits)

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.bits, other.bits)

    def __getitem__(self, pair) -> int:
        x, y = pair
        idx = self.index
        return int(self.bits[idx[x], idx[y]])

    @property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.order)}

    @property
    def n(self) -> int:
        return len(self.order)

    def ones(self) -> int:
        return int(self.bits.sum())

    def to_csv(self) -> str:
        lines = [",".join(self.order)]
        lines.extend(",".join(str(int(v)) for v in row) for row in self.bits)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class ContingencyTable:
    """Counts n_uv of elements shared by class u of one partition and class v of another."""

    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def shape(self) -> tuple:
        return self.counts.shape

    def tolist(self) -> list:
        return self.counts.tolist()


def _unwrap(rs):
    return rs.value if isinstance(rs, ResultSet) else rs


def _default_order(universe) -> tuple:
    return tuple(sorted(universe))


def _kind_label(value, kind: RelationKind):
    """Return (key_fn, relation_type) describing ``kind`` on ``value``.

    relation_type is "eq" (related iff keys are equal) or "lt" (related iff
    key(x) < key(y), plus the loop). ``None`` key means unsupported.
    """
    if isinstance(value, OrderedPartition):
        cls = value.class_of
        if kind in (RelationKind.SAME_CLUSTER, RelationKind.SAME_RANK):
            return cls.__getitem__, "eq"
        if kind is RelationKind.GREATER_THAN:
            return cls.__getitem__, "lt"
        if kind is RelationKind.GREATER_OR_EQUAL:
            return cls.__getitem__, "le"
    elif isinstance(value, Partition):
        if kind is RelationKind.SAME_CLUSTER:
            return value.class_of.__getitem__, "eq"
    elif isinstance(value, Chain):
        # a chain behaves as an ordered partition of singletons
        if kind in (RelationKind.GREATER_THAN, RelationKind.GREATER_OR_EQUAL):
            return value.rank.__getitem__, "lt"
    elif isinstance(value, PartitionOfChains):
        if kind is RelationKind.SAME_CLUSTER:
            return value.chain_of.__getitem__, "eq"
        if kind is RelationKind.SAME_RANK:
            return value.rank.__getitem__, "eq"
        if kind is RelationKind.GREATER_THAN:
            chain_of, rank = value.chain_of, value.rank
            return (lambda x: (chain_of[x], rank[x])), "chain_lt"
    return None, None


def adjacency(rs, kind: RelationKind, order: Sequence | None = None) -> AdjacencyMatrix:
    """Build the adjacency matrix of relation ``kind`` on a result set.

    ``order`` fixes row/column positions and must be a permutation of the
    result set's universe; by default elements are sorted lexicographically.
    """
    value = _unwrap(rs)
    key, rel = _kind_label(value, kind)
    if key is None:
        raise UnsupportedRelation(f"{kind.value} is not defined on {type(value).__name__}")
    universe = value.universe
    order = _default_order(universe) if order is None else tuple(order)
    if len(order) != len(universe) or set(order) != universe:
        raise OrderMismatch("matrix order must list every element of the universe exactly once")

    keys = [key(x) for x in order]
    n = len(order)
    bits = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        ki = keys[i]
        for j in range(n):
            kj = keys[j]
            if rel == "eq":
                hit = ki == kj
            elif rel == "lt":
                hit = ki < kj
            elif rel == "le":
                hit = ki <= kj
            else:  # chain_lt: same chain, strictly earlier rank
                hit = ki[0] == kj[0] and ki[1] < kj[1]
            bits[i, j] = 1 if hit or i == j else 0
    return AdjacencyMatrix(order, bits)


def relation_sum(m1: AdjacencyMatrix, m2: AdjacencyMatrix) -> AdjacencyMatrix:
    """Entrywise boolean OR of two relations over the same element order."""
    if m1.order != m2.order:
        raise OrderMismatch("relations are indexed by different element orders")
    return AdjacencyMatrix(m1.order, np.bitwise_or(m1.bits, m2.bits))


def contingency(v1: Partition, v2: Partition, strict: bool = False) -> ContingencyTable:
    """Contingency table of two partitions.

    In lenient mode (default) elements that are not in both universes are
    ignored and classes emptied by the restriction are dropped. With
    ``strict=True`` differing universes raise :class:`UniverseMismatch`.
    """
    v1, v2 = common_universe(v1, v2, strict=strict)
    col = v2.class_of
    counts = np.zeros((len(v1.classes), len(v2.classes)), dtype=np.int64)
    for u, cls in enumerate(v1.classes):
        for x in cls:
            counts[u, col[x] - 1] += 1
    return ContingencyTable(counts)


def common_universe(v1: Partition, v2: Partition, strict: bool = False):
    """Return both partitions restricted to their shared elements."""
    if v1.universe == v2.universe:
        return v1, v2
    if strict:
        only1 = sorted(v1.universe - v2.universe)
        only2 = sorted(v2.universe - v1.universe)
        raise UniverseMismatch(f"universes differ: only in first {only1}, only in second {only2}")
    shared = v1.universe & v2.universe
    return restrict(v1, shared), restrict(v2, shared)


def indicator(s: Iterable, universe: Sequence) -> np.ndarray:
    """0/1 vector of membership of ``s`` over the ordered ``universe``."""
    s = _unwrap(s)
    members = set(s.elements if isinstance(s, Antichain) else s)
    position = {x: i for i, x in enumerate(universe)}
    unknown = members - position.keys()
    if unknown:
        raise UnknownElement(f"element(s) outside the universe: {sorted(unknown)}")
    vec = np.zeros(len(universe), dtype=np.int64)
    for x in members:
        vec[position[x]] = 1
    return vec


def dot_intersection(s1, s2, universe: Sequence) -> int:
    """Size of the intersection as the product of two indicator vectors."""
    return int(indicator(s1, universe) @ indicator(s2, universe))


def _dot_id(x: str) -> str:
    return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(rs, kinds: Iterable[RelationKind], name: str = "G") -> str:
    """Render the relations as a DOT digraph, one edge style per kind.

    Loops are not drawn.
    """
    value = _unwrap(rs)
    kinds = list(kinds)
    order = _default_order(value.universe)
    matrices = [(k, adjacency(value, k, order)) for k in kinds]

    lines = [f"digraph {_dot_id(name)} {{"]
    for x in order:
        lines.append(f"  {_dot_id(x)};")
    for kind, m in matrices:
        style = EDGE_STYLE[kind]
        for i, j in zip(*np.nonzero(m.bits)):
            if i == j:
                continue
            lines.append(
                f"  {_dot_id(order[i])} -> {_dot_id(order[j])} "
                f'[style={style}, label="{kind.value}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
