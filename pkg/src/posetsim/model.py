"""Answer-set shapes: antichains, chains, partitions, ordered partitions and
partitions of chains over a universe of opaque element ids.

All values are immutable and validated on construction. Class and rank
indices are 1-based wherever they are exposed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

from .errors import DuplicateElement, EmptyClass, InvariantViolation

Element = str


def _check_id(x) -> Element:
    if not isinstance(x, str) or not x or any(ch.isspace() for ch in x):
        raise InvariantViolation(f"invalid element id: {x!r}")
    return x


def _disjoint_classes(classes: Iterable[Iterable[Element]]) -> tuple[frozenset, ...]:
    seen: set[Element] = set()
    out = []
    for idx, cls in enumerate(classes, start=1):
        members = list(cls)
        if not members:
            raise EmptyClass(f"class {idx} is empty")
        fs = frozenset(_check_id(x) for x in members)
        if len(fs) != len(members):
            raise DuplicateElement(f"class {idx} repeats an element")
        clash = seen & fs
        if clash:
            raise DuplicateElement(f"element(s) {sorted(clash)} occur in more than one class")
        seen |= fs
        out.append(fs)
    return tuple(out)


def _unique_sequence(seq: Iterable[Element]) -> tuple[Element, ...]:
    items = tuple(_check_id(x) for x in seq)
    if len(set(items)) != len(items):
        dup = sorted({x for x in items if items.count(x) > 1})
        raise DuplicateElement(f"element(s) {dup} presented more than once")
    return items


@dataclass(frozen=True)
class Antichain:
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(_check_id(x) for x in self.elements))

    @property
    def universe(self) -> frozenset:
        return self.elements

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Chain:
    """Strict total order; position 1 is the first presented element."""

    sequence: tuple

    def __post_init__(self):
        object.__setattr__(self, "sequence", _unique_sequence(self.sequence))

    @property
    def universe(self) -> frozenset:
        return frozenset(self.sequence)

    @cached_property
    def rank(self) -> dict[Element, int]:
        return {x: i for i, x in enumerate(self.sequence, start=1)}

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)


@dataclass(frozen=True)
class Partition:
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", _disjoint_classes(self.classes))

    @cached_property
    def universe(self) -> frozenset:
        return frozenset().union(*self.classes)

    @property
    def n(self) -> int:
        return len(self.universe)

    @cached_property
    def class_of(self) -> dict[Element, int]:
        """Map each element to its 1-based class index."""
        return {x: i for i, cls in enumerate(self.classes, start=1) for x in cls}

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class OrderedPartition(Partition):
    """Partition whose classes are totally ordered; class 1 is the most important."""


@dataclass(frozen=True)
class PartitionOfChains:
    """Unordered collection of disjoint chains."""

    chains: tuple

    def __post_init__(self):
        chains = tuple(c if isinstance(c, Chain) else Chain(tuple(c)) for c in self.chains)
        for idx, c in enumerate(chains, start=1):
            if len(c) == 0:
                raise EmptyClass(f"chain {idx} is empty")
        _disjoint_classes(c.sequence for c in chains)
        object.__setattr__(self, "chains", chains)

    @cached_property
    def universe(self) -> frozenset:
        return frozenset(x for c in self.chains for x in c.sequence)

    @property
    def n(self) -> int:
        return len(self.universe)

    @cached_property
    def chain_of(self) -> dict[Element, int]:
        return {x: i for i, c in enumerate(self.chains, start=1) for x in c.sequence}

    @cached_property
    def rank(self) -> dict[Element, int]:
        """Within-chain 1-based rank of every element."""
        return {x: r for c in self.chains for x, r in c.rank.items()}

    def __len__(self) -> int:
        return len(self.chains)


Shape = Union[Antichain, Chain, Partition, OrderedPartition, PartitionOfChains]

SHAPE_TAGS = {
    Antichain: "antichain",
    Chain: "chain",
    Partition: "partition",
    OrderedPartition: "ordered_partition",
    PartitionOfChains: "partition_of_chains",
}


def shape_tag(value: Shape) -> str:
    return SHAPE_TAGS[type(value)]


@dataclass(frozen=True)
class ResultSet:
    value: Shape
    label: str = field(default="")

    def __post_init__(self):
        if type(self.value) not in SHAPE_TAGS:
            raise TypeError(f"unsupported answer shape: {type(self.value).__name__}")

    @property
    def shape(self) -> str:
        return shape_tag(self.value)

    @property
    def universe(self) -> frozenset:
        return self.value.universe


def make_partition(classes) -> Partition:
    return Partition(tuple(classes))


def make_ordered_partition(classes) -> OrderedPartition:
    return OrderedPartition(tuple(classes))


def make_chain(sequence) -> Chain:
    return Chain(tuple(sequence))


def make_partition_of_chains(chains) -> PartitionOfChains:
    return PartitionOfChains(tuple(tuple(c) for c in chains))


def vc_to_partition(vc: PartitionOfChains) -> Partition:
    """Forget the order inside each chain."""
    return Partition(tuple(c.sequence for c in vc.chains))


def vc_to_ordered_partition(vc: PartitionOfChains) -> OrderedPartition:
    """Aggregate elements by within-chain rank: class k holds every k-th element."""
    depth = max((len(c) for c in vc.chains), default=0)
    classes = [[c.sequence[k] for c in vc.chains if k < len(c)] for k in range(depth)]
    return OrderedPartition(tuple(classes))


def chain_to_ordered_partition(c: Chain) -> OrderedPartition:
    return OrderedPartition(tuple((x,) for x in c.sequence))


def ordered_to_partition(ov: OrderedPartition) -> Partition:
    return Partition(ov.classes)


def restrict(p: Partition, universe) -> Partition:
    """Drop elements outside ``universe``; classes left empty disappear.

    The result keeps the type (ordered or not) of ``p``.
    """
    keep = frozenset(universe)
    classes = [cls & keep for cls in p.classes]
    return type(p)(tuple(c for c in classes if c))


def canonical(cls) -> list[Element]:
    """Deterministic listing of an unordered class (output only)."""
    return sorted(cls)
