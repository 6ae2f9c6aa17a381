"""Measure dispatch by answer shape, shape coercion, reports and oracle checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Callable

from . import oracle, ordered, partitions, ranks
from .errors import PosetSimError, ShapeMismatch
from .model import (
    Antichain,
    Chain,
    OrderedPartition,
    Partition,
    PartitionOfChains,
    ResultSet,
    chain_to_ordered_partition,
    ordered_to_partition,
    vc_to_ordered_partition,
    vc_to_partition,
)
from .sets import StrongMeasureKind, WeakMeasureKind, strong_measure, weak_measure

DEFAULT_CUTOFFS = (1, 2, 5, 10, 15, 20, 30, 50, 100, 300, 1000)
VERIFY_TOL = 1e-12

# Direct coercions between shapes; longer paths compose these.
_COERCE: dict[str, dict[str, Callable]] = {
    "chain": {
        "ordered_partition": chain_to_ordered_partition,
        "antichain": lambda c: Antichain(c.universe),
    },
    "partition_of_chains": {
        "partition": vc_to_partition,
        "ordered_partition": vc_to_ordered_partition,
        "antichain": lambda v: Antichain(v.universe),
    },
    "ordered_partition": {
        "partition": ordered_to_partition,
        "antichain": lambda v: Antichain(v.universe),
    },
    "partition": {"antichain": lambda v: Antichain(v.universe)},
    "antichain": {},
}
# Preferred targets, most informative first.
_TARGETS = ("ordered_partition", "partition", "antichain")


def _reach(shape: str) -> dict[str, list[Callable]]:
    """Every shape reachable from ``shape`` with the conversion steps to get there."""
    paths = {shape: []}
    frontier = [shape]
    while frontier:
        s = frontier.pop(0)
        for t, fn in _COERCE[s].items():
            if t not in paths:
                paths[t] = paths[s] + [fn]
                frontier.append(t)
    return paths


def coerce(rs: ResultSet, target: str) -> ResultSet:
    paths = _reach(rs.shape)
    if target not in paths:
        raise ShapeMismatch(f"cannot coerce {rs.shape} to {target}")
    value = rs.value
    for fn in paths[target]:
        value = fn(value)
    return ResultSet(value, rs.label)


def align(rs1: ResultSet, rs2: ResultSet, allow_coercion: bool = False) -> tuple[ResultSet, ResultSet]:
    """Bring two result sets to a common shape."""
    if rs1.shape == rs2.shape:
        return rs1, rs2
    if not allow_coercion:
        raise ShapeMismatch(f"cannot compare {rs1.shape} with {rs2.shape} without coercion")
    r1, r2 = _reach(rs1.shape), _reach(rs2.shape)
    for target in _TARGETS:
        if target in r1 and target in r2:
            return coerce(rs1, target), coerce(rs2, target)
    raise ShapeMismatch(f"no common shape for {rs1.shape} and {rs2.shape}")


@dataclass
class Options:
    weighting: ordered.FuzzyWeighting = field(default_factory=lambda: ordered.DEFAULT_WEIGHTING)
    cutoffs: tuple = DEFAULT_CUTOFFS
    qrels: frozenset | None = None
    strict: bool = False
    beta: float = 1.0
    coerce: bool = False


def _set_measures(v1, v2, opts: Options) -> dict[str, Callable[[], float]]:
    out = {}
    for kind in StrongMeasureKind:
        out[f"set_{kind.value}"] = lambda k=kind: strong_measure(k, v1, v2, beta=opts.beta)
    for kind in WeakMeasureKind:
        out[f"set_{kind.value}"] = lambda k=kind: weak_measure(k, v1, v2)
    return out


def _partition_measures(p1, p2, opts: Options) -> dict[str, Callable[[], float]]:
    s = opts.strict
    return {
        "rand_pair": lambda: partitions.rand_pair(p1, p2, strict=s),
        "rand_relational": lambda: partitions.rand_relational(p1, p2, strict=s),
        "rand_asymmetric": lambda: partitions.rand_asymmetric(p1, p2, strict=s),
        "jaccard_partition": lambda: partitions.jaccard_partition(p1, p2, strict=s),
    }


def _ordered_measures(o1, o2, opts: Options, prefix: str = "ordered") -> dict[str, Callable[[], float]]:
    w = opts.weighting
    return {
        f"{prefix}_{kind.value}": (lambda k=kind: ordered.ordered_measure(k, o1, o2, w))
        for kind in ordered.OrderedKind
    }


def _chain_measures(c1, c2, opts: Options) -> dict[str, Callable[[], float]]:
    out = {
        "spearman": lambda: ranks.spearman_rho(c1, c2),
        "kendall": lambda: ranks.kendall_tau(c1, c2),
    }
    for corr in ranks.Correlation:
        for base in StrongMeasureKind:
            out[f"do_{corr.value}_{base.value}"] = (
                lambda b=base, k=corr: ranks.ordered_combination(c1, c2, b, k, beta=opts.beta)
            )
    out.update(_ordered_measures(chain_to_ordered_partition(c1), chain_to_ordered_partition(c2), opts))
    return out


def _qrels_measures(rs: ResultSet, tag: str, opts: Options) -> dict[str, Callable[[], float]]:
    qrels = opts.qrels
    value = rs.value
    out = {}
    if isinstance(value, Chain):
        for k in opts.cutoffs:
            out[f"precision_at_{k}[{tag}]"] = lambda k=k: ranks.precision_at(value, qrels, k)
            out[f"recall_at_{k}[{tag}]"] = lambda k=k: ranks.recall_at(value, qrels, k)
        out[f"r_precision[{tag}]"] = lambda: ranks.r_precision(value, qrels)
        out[f"average_precision[{tag}]"] = lambda: ranks.average_precision(value, qrels)
        out[f"precision_at_half_recall[{tag}]"] = lambda: ranks.precision_at_half_recall(value, qrels)
    elif isinstance(value, Antichain):
        out[f"recall[{tag}]"] = lambda: weak_measure(WeakMeasureKind.RECALL, value, qrels)
        out[f"precision[{tag}]"] = lambda: weak_measure(WeakMeasureKind.PRECISION, value, qrels)
    return out


def _tags(rs1: ResultSet, rs2: ResultSet) -> tuple[str, str]:
    t1, t2 = rs1.label or "1", rs2.label or "2"
    if t1 == t2:
        t1, t2 = f"{t1}#1", f"{t2}#2"
    return t1, t2


def applicable_measures(rs1: ResultSet, rs2: ResultSet, opts: Options) -> dict[str, Callable[[], float]]:
    """Name -> deferred computation for every measure defined on the pair."""
    a, b = align(rs1, rs2, opts.coerce)
    v1, v2 = a.value, b.value
    out = _set_measures(v1, v2, opts)
    if isinstance(v1, Chain):
        out.update(_chain_measures(v1, v2, opts))
    elif isinstance(v1, OrderedPartition):
        out.update(_ordered_measures(v1, v2, opts))
        out.update(_partition_measures(ordered_to_partition(v1), ordered_to_partition(v2), opts))
    elif isinstance(v1, Partition):
        out.update(_partition_measures(v1, v2, opts))
    elif isinstance(v1, PartitionOfChains):
        w = opts.weighting
        for kind in ordered.OrderedKind:
            out[f"poset_{kind.value}"] = (
                lambda k=kind: ordered.poset_similarity_template(k, v1, v2, w, strict=opts.strict)
            )
        out.update(_partition_measures(vc_to_partition(v1), vc_to_partition(v2), opts))
        out.update(_ordered_measures(vc_to_ordered_partition(v1), vc_to_ordered_partition(v2), opts))
    if opts.qrels is not None:
        t1, t2 = _tags(a, b)
        out.update(_qrels_measures(a, t1, opts))
        out.update(_qrels_measures(b, t2, opts))
    return out


def format_value(x: float) -> str:
    """Fixed six decimals, round-half-even on the exact binary value."""
    if math.isnan(x) or math.isinf(x):
        return "NA"
    q = Decimal(x).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return f"{q:.6f}"


@dataclass
class ReportLine:
    name: str
    value: float | None
    error: str | None = None

    def render(self) -> str:
        if self.value is None:
            return f"{self.name} NA"
        return f"{self.name} {format_value(self.value)}"


@dataclass
class Report:
    labels: tuple
    shapes: tuple
    parameters: dict
    lines: list

    @property
    def undefined(self) -> list:
        return [ln for ln in self.lines if ln.value is None]

    def value(self, name: str) -> float | None:
        for ln in self.lines:
            if ln.name == name:
                return ln.value
        raise KeyError(name)

    def render(self) -> str:
        out = [
            f"# left: {self.labels[0]} ({self.shapes[0]})",
            f"# right: {self.labels[1]} ({self.shapes[1]})",
        ]
        out.extend(f"# {k}: {v}" for k, v in self.parameters.items())
        out.extend(ln.render() for ln in self.lines)
        return "\n".join(out) + "\n"


def _parameters(opts: Options, has_chain: bool) -> dict:
    params = {"phi": opts.weighting.name, "beta": f"{opts.beta:g}", "universe": "strict" if opts.strict else "lenient"}
    if opts.qrels is not None and has_chain:
        params["cutoffs"] = ",".join(str(k) for k in opts.cutoffs)
    return params


def evaluate(name: str, fn: Callable[[], float]) -> ReportLine:
    try:
        return ReportLine(name, float(fn()))
    except PosetSimError as exc:
        return ReportLine(name, None, str(exc))


def compare(rs1: ResultSet, rs2: ResultSet, opts: Options | None = None, measures=None) -> Report:
    opts = opts or Options()
    table = applicable_measures(rs1, rs2, opts)
    names = sorted(table)
    if measures:
        unknown = sorted(set(measures) - set(table))
        if unknown:
            raise ShapeMismatch(f"measure(s) not applicable to these inputs: {unknown}")
        names = [n for n in names if n in set(measures)]
    lines = [evaluate(n, table[n]) for n in names]
    a, _ = align(rs1, rs2, opts.coerce)
    return Report(
        labels=(rs1.label, rs2.label),
        shapes=(rs1.shape, rs2.shape),
        parameters=_parameters(opts, isinstance(a.value, Chain)),
        lines=lines,
    )


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= VERIFY_TOL


def verify(rs1: ResultSet, rs2: ResultSet, opts: Options | None = None) -> list[str]:
    """Cross-check closed forms against the brute-force oracles.

    Returns a list of human-readable mismatches (empty when all agree).
    """
    opts = opts or Options()
    a, b = align(rs1, rs2, opts.coerce)
    v1, v2 = a.value, b.value
    problems = []

    part_pair = ordered_pair = chain_pair = None
    if isinstance(v1, Chain):
        chain_pair = (v1, v2)
        ordered_pair = (chain_to_ordered_partition(v1), chain_to_ordered_partition(v2))
    elif isinstance(v1, OrderedPartition):
        ordered_pair = (v1, v2)
        part_pair = (v1, v2)
    elif isinstance(v1, Partition):
        part_pair = (v1, v2)
    elif isinstance(v1, PartitionOfChains):
        part_pair = (vc_to_partition(v1), vc_to_partition(v2))
        ordered_pair = (vc_to_ordered_partition(v1), vc_to_ordered_partition(v2))

    if part_pair is not None:
        p1, p2 = part_pair
        # lenient on purpose: the oracle also works on the shared elements
        fast = partitions.pair_census(p1, p2)
        slow = oracle.pairs_bruteforce(p1, p2)
        if fast.astuple() != slow.astuple() or fast.n != slow.n:
            problems.append(f"pair census {fast.astuple()} != brute force {slow.astuple()}")
    if ordered_pair is not None:
        o1, o2 = ordered_pair
        fast = ordered.fuzzy_cardinalities(o1, o2, opts.weighting)
        slow = oracle.fuzzy_bruteforce(o1, o2, opts.weighting)
        for fld in ("inter", "union", "card1", "card2"):
            x, y = getattr(fast, fld), getattr(slow, fld)
            if not _close(x, y):
                problems.append(f"fuzzy {fld} {x!r} != brute force {y!r}")
    if chain_pair is not None:
        c1, c2 = chain_pair
        if c1.universe & c2.universe:
            checks = (
                ("kendall", ranks.kendall_tau, oracle.tau_bruteforce),
                ("spearman", ranks.spearman_rho, oracle.spearman_bruteforce),
            )
            for name, fast_fn, slow_fn in checks:
                x, y = fast_fn(c1, c2), slow_fn(c1, c2)
                if not _close(x, y):
                    problems.append(f"{name} {x!r} != brute force {y!r}")
    return problems
