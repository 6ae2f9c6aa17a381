"""Plain-text run files and qrels files.

A run file starts with ``#type: <shape>``. Every following non-blank line
that does not start with ``#`` holds tab-separated columns:

======================  ========================
shape                   columns
======================  ========================
antichain               id
chain                   id (lines in rank order)
partition               id, class
ordered_partition       id, class
partition_of_chains     id, class, rank
======================  ========================

Class and rank numbers are 1-based and must be contiguous.
"""
from __future__ import annotations

from pathlib import Path

from .errors import DuplicateElement, InvariantViolation, ParseError
from .model import (
    Antichain,
    Chain,
    OrderedPartition,
    Partition,
    PartitionOfChains,
    ResultSet,
    canonical,
    shape_tag,
)

COLUMNS = {
    "antichain": 1,
    "chain": 1,
    "partition": 2,
    "ordered_partition": 2,
    "partition_of_chains": 3,
}


def _int(field: str, what: str, lineno: int) -> int:
    try:
        value = int(field)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {field!r}", lineno) from None
    if value < 1:
        raise ParseError(f"{what} must be >= 1, got {value}", lineno)
    return value


def _contiguous(indices, what: str):
    expected = set(range(1, len(indices) + 1))
    if set(indices) != expected:
        missing = sorted(expected - set(indices))
        raise InvariantViolation(f"{what} numbers must be contiguous from 1; missing {missing}")


def parse_runfile(text: str, label: str = "") -> ResultSet:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ParseError("first line must be '#type: <shape>'", 1)
    key, _, shape = lines[0][1:].partition(":")
    shape = shape.strip()
    if key.strip() != "type" or shape not in COLUMNS:
        raise ParseError(f"unknown header {lines[0]!r}; expected '#type: <shape>' with shape in {sorted(COLUMNS)}", 1)
    ncols = COLUMNS[shape]

    rows = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != ncols:
            raise ParseError(f"expected {ncols} column(s) for {shape}, got {len(fields)}", lineno)
        ident = fields[0]
        if ident in seen:
            raise DuplicateElement(f"line {lineno}: duplicate id {ident!r} (first on line {seen[ident]})")
        seen[ident] = lineno
        nums = [_int(f, name, lineno) for f, name in zip(fields[1:], ("class", "rank"))]
        rows.append((ident, *nums))

    if shape == "antichain":
        value = Antichain(frozenset(r[0] for r in rows))
    elif shape == "chain":
        value = Chain(tuple(r[0] for r in rows))
    elif shape in ("partition", "ordered_partition"):
        groups: dict[int, list] = {}
        for ident, cls in rows:
            groups.setdefault(cls, []).append(ident)
        _contiguous(list(groups), "class")
        classes = tuple(groups[k] for k in sorted(groups))
        value = (Partition if shape == "partition" else OrderedPartition)(classes)
    else:
        chains: dict[int, dict[int, str]] = {}
        for ident, cls, rank in rows:
            members = chains.setdefault(cls, {})
            if rank in members:
                raise InvariantViolation(f"chain {cls} has two elements at rank {rank}")
            members[rank] = ident
        _contiguous(list(chains), "class")
        for cls, members in chains.items():
            _contiguous(list(members), f"rank (chain {cls})")
        value = PartitionOfChains(tuple(tuple(chains[k][r] for r in sorted(chains[k])) for k in sorted(chains)))
    return ResultSet(value, label)


def serialize_runfile(rs) -> str:
    value = rs.value if isinstance(rs, ResultSet) else rs
    shape = shape_tag(value)
    out = [f"#type: {shape}"]
    if isinstance(value, Antichain):
        out.extend(canonical(value.elements))
    elif isinstance(value, Chain):
        out.extend(value.sequence)
    elif isinstance(value, Partition):
        for k, cls in enumerate(value.classes, start=1):
            out.extend(f"{x}\t{k}" for x in canonical(cls))
    else:
        for k, chain in enumerate(value.chains, start=1):
            out.extend(f"{x}\t{k}\t{r}" for r, x in enumerate(chain.sequence, start=1))
    return "\n".join(out) + "\n"


def read_runfile(path, label: str | None = None) -> ResultSet:
    path = Path(path)
    return parse_runfile(path.read_text(encoding="utf-8"), label=path.stem if label is None else label)


def parse_qrels(text: str) -> frozenset:
    """One relevant id per line; blank lines and ``#`` comments are skipped."""
    ids = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 1:
            raise ParseError("qrels lines hold exactly one id", lineno)
        ids.add(fields[0])
    return frozenset(ids)


def read_qrels(path) -> frozenset:
    return parse_qrels(Path(path).read_text(encoding="utf-8"))
