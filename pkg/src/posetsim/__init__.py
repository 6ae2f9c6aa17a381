"""Similarity measures between answer sets of retrieval systems.

Answers may be unordered sets, ranked lists, partitions, ordered partitions
or partitions of chains; see :mod:`posetsim.model`.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DuplicateElement,
    EmptyClass,
    InvariantViolation,
    NoCommonElements,
    OrderMismatch,
    ParseError,
    PosetSimError,
    ShapeMismatch,
    TooFewElements,
    UndefinedMeasure,
    UniverseMismatch,
    UnknownElement,
    UnsupportedRelation,
)
from .model import (  # noqa: E402
    Antichain,
    Chain,
    OrderedPartition,
    Partition,
    PartitionOfChains,
    ResultSet,
    chain_to_ordered_partition,
    make_chain,
    make_ordered_partition,
    make_partition,
    make_partition_of_chains,
    vc_to_ordered_partition,
    vc_to_partition,
)
from .ordered import (  # noqa: E402
    FuzzyCardinalities,
    FuzzyWeighting,
    OrderedKind,
    fuzzy_cardinality,
    fuzzy_intersection,
    fuzzy_union,
    ordered_jaccard,
    ordered_measure,
    poset_similarity,
    poset_similarity_template,
)
from .partitions import (  # noqa: E402
    PairCensus,
    jaccard_partition,
    jaccard_relational,
    pair_census,
    rand_asymmetric,
    rand_pair,
    rand_relational,
)
from .ranks import (  # noqa: E402
    Correlation,
    Qrels,
    average_precision,
    kendall_tau,
    ordered_combination,
    precision_at,
    r_precision,
    recall_at,
    spearman_rho,
)
from .relational import (  # noqa: E402
    AdjacencyMatrix,
    ContingencyTable,
    RelationKind,
    adjacency,
    contingency,
    dot_intersection,
    export_dot,
    relation_sum,
)
from .sets import StrongMeasureKind, WeakMeasureKind, strong_measure, weak_measure  # noqa: E402
