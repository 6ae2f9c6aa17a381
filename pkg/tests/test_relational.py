import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import TABLE_1, TABLE_2, TABLE_3, random_classes, random_partition_pair, rngs
from posetsim.errors import OrderMismatch, UniverseMismatch, UnknownElement, UnsupportedRelation
from posetsim.model import (
    Antichain,
    Chain,
    OrderedPartition,
    Partition,
    PartitionOfChains,
    make_partition,
    make_partition_of_chains,
)
from posetsim.relational import (
    AdjacencyMatrix,
    RelationKind,
    adjacency,
    contingency,
    dot_intersection,
    export_dot,
    relation_sum,
)

SAME, GT, RANK, GE = (
    RelationKind.SAME_CLUSTER,
    RelationKind.GREATER_THAN,
    RelationKind.SAME_RANK,
    RelationKind.GREATER_OR_EQUAL,
)

FIG3 = make_partition([{"A", "B", "C"}, {"D", "E"}, {"F"}])
FIG2 = Chain(tuple("ABCDEF"))
FIG4 = OrderedPartition((("A", "B", "C"), ("D", "E"), ("F",)))
FIG5 = make_partition_of_chains([["A", "B", "C"], ["D", "E"], ["F"]])


def test_table_1():
    assert adjacency(FIG3, SAME).to_csv() == TABLE_1


def test_table_2():
    assert adjacency(FIG2, GT).to_csv() == TABLE_2


def test_table_3():
    assert adjacency(FIG4, GE).to_csv() == TABLE_3


def test_table_3_as_relation_sum():
    assert relation_sum(adjacency(FIG4, GT), adjacency(FIG4, SAME)) == adjacency(FIG4, GE)


def test_greater_than_on_ordered_partition_row_d():
    m = adjacency(FIG4, GT)
    assert [m["D", x] for x in "ABCDEF"] == [0, 0, 0, 1, 0, 1]
    assert m["A", "B"] == 0
    ge = adjacency(FIG4, GE)
    assert [ge["D", x] for x in "ABCDEF"] == [0, 0, 0, 1, 1, 1]


def test_relation_sum_idempotent_and_identity():
    m = adjacency(FIG3, SAME)
    assert relation_sum(m, m) == m
    eye = AdjacencyMatrix(m.order, np.eye(6, dtype=np.uint8))
    assert relation_sum(m, eye) == m


def test_relation_sum_order_mismatch():
    m = adjacency(FIG3, SAME)
    other = adjacency(FIG3, SAME, order="FEDCBA")
    with pytest.raises(OrderMismatch):
        relation_sum(m, other)


def test_custom_order_permutes_rows():
    m = adjacency(FIG2, GT, order="FEDCBA")
    assert m["A", "F"] == 1 and m["F", "A"] == 0
    assert m.bits[0, 5] == 0 and m.bits[5, 0] == 1


def test_bad_order():
    with pytest.raises(OrderMismatch):
        adjacency(FIG3, SAME, order="ABC")


@pytest.mark.parametrize(
    "value, kind",
    [(FIG3, GT), (FIG3, RANK), (FIG2, SAME), (FIG5, GE), (Antichain(frozenset("AB")), SAME)],
)
def test_unsupported_relations(value, kind):
    with pytest.raises(UnsupportedRelation):
        adjacency(value, kind)


def test_partition_of_chains_relations():
    same = adjacency(FIG5, SAME)
    gt = adjacency(FIG5, GT)
    rank = adjacency(FIG5, RANK)
    assert same["A", "C"] == 1 and same["A", "D"] == 0
    assert gt["A", "C"] == 1 and gt["C", "A"] == 0 and gt["A", "E"] == 0
    assert rank["A", "D"] == rank["A", "F"] == rank["B", "E"] == 1
    assert rank["A", "B"] == 0


def test_contingency_example():
    v2 = make_partition([{"A", "B"}, {"C", "D", "E"}, {"F"}])
    t = contingency(FIG3, v2)
    assert t.tolist() == [[2, 1, 0], [0, 2, 0], [0, 0, 1]]
    assert t.row_sums.tolist() == [3, 2, 1]
    assert t.col_sums.tolist() == [2, 3, 1]
    assert t.total == 6


def test_contingency_identical_and_row():
    assert contingency(FIG3, FIG3).tolist() == [[3, 0, 0], [0, 2, 0], [0, 0, 1]]
    assert contingency(make_partition([{"A", "B"}]), make_partition([{"A"}, {"B"}])).tolist() == [[1, 1]]


def test_contingency_universe_policy():
    v1 = make_partition([{"A", "B"}, {"C"}])
    v2 = make_partition([{"A", "B", "Z"}])
    assert contingency(v1, v2).tolist() == [[2]]
    with pytest.raises(UniverseMismatch):
        contingency(v1, v2, strict=True)


def test_dot_intersection():
    universe = list("ABCDEF")
    assert dot_intersection(Antichain(frozenset("ABC")), Antichain(frozenset("BCD")), universe) == 2
    assert dot_intersection({"A", "C", "E"}, {"A", "C", "E"}, universe) == 3
    assert dot_intersection({"A"}, {"B"}, universe) == 0
    with pytest.raises(UnknownElement):
        dot_intersection({"Z"}, {"A"}, universe)


def test_export_dot_partition():
    text = export_dot(FIG3, [SAME])
    assert text.startswith('digraph "G" {')
    for x in "ABCDEF":
        assert f'  "{x}";' in text
    edges = [ln for ln in text.splitlines() if "->" in ln]
    assert len(edges) == 2 * 3 + 2  # ordered pairs within {A,B,C} and {D,E}
    assert all("style=solid" in e for e in edges)
    assert not any('"A" -> "A"' in e for e in edges)


def test_export_dot_nodes_only():
    text = export_dot(FIG3, [])
    assert "->" not in text
    assert text.count(";") == 6


def test_export_dot_partition_of_chains_styles():
    text = export_dot(FIG5, [SAME, GT])
    solid = [ln for ln in text.splitlines() if "style=solid" in ln]
    dashed = [ln for ln in text.splitlines() if "style=dashed" in ln]
    assert len(solid) == 6 + 2
    assert len(dashed) == 3 + 1
    assert '"A" -> "C" [style=dashed' in text


def test_export_dot_unsupported():
    with pytest.raises(UnsupportedRelation):
        export_dot(FIG3, [GT])


def test_relation_kind_parse():
    assert RelationKind.parse("greater-than") is GT
    assert RelationKind.parse("ge") is GE
    with pytest.raises(UnsupportedRelation):
        RelationKind.parse("nope")


def _int_bits(p):
    return adjacency(p, SAME).bits.astype(np.int64)


def test_kendall_marcotorchino_identities_random():
    for rng in rngs(300, seed=7):
        v1, v2 = random_partition_pair(rng)
        t = contingency(v1, v2)
        a1, a2 = _int_bits(v1), _int_bits(v2)
        assert int((t.counts**2).sum()) == int((a1 * a2).sum())
        assert int((t.row_sums**2).sum()) == int(a1.sum())
        assert int((t.col_sums**2).sum()) == int(a2.sum())


@settings(max_examples=60)
@given(st.integers(0, 2**32), st.integers(1, 12))
def test_relation_properties(seed, n):
    import random

    rng = random.Random(seed)
    universe = [f"x{i}" for i in range(n)]
    chains = random_classes(rng, universe, 4)
    vc = PartitionOfChains(tuple(tuple(c) for c in chains))
    ov = OrderedPartition(tuple(random_classes(rng, universe, 4)))
    for value, kind in [(vc, SAME), (vc, RANK), (ov, SAME), (ov, RANK)]:
        b = adjacency(value, kind).bits
        assert np.array_equal(b, b.T)
        assert np.all(np.diag(b) == 1)
    for value in (vc, ov, Chain(tuple(universe))):
        g = adjacency(value, GT).bits.astype(bool)
        off = g & ~np.eye(n, dtype=bool)
        assert not np.any(off & off.T)
        closure = (off.astype(int) @ off.astype(int)) > 0
        assert not np.any(closure & ~off)
    gt = adjacency(vc, GT).bits.astype(bool)
    same = adjacency(vc, SAME).bits.astype(bool)
    assert not np.any(gt & ~same)
    assert relation_sum(adjacency(ov, GT), adjacency(ov, SAME)) == adjacency(ov, GE)


def test_matrix_entries_binary():
    with pytest.raises(ValueError):
        AdjacencyMatrix(("A",), np.array([[2]]))
    assert isinstance(FIG3, Partition)
