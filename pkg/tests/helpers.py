"""Random instance generators and fixture tables shared by the tests."""
import random

from posetsim.model import Chain, OrderedPartition, Partition, PartitionOfChains

DATA = __import__("pathlib").Path(__file__).parent / "data"

# Reference adjacency tables for fig3_partition (same cluster), fig2_chain
# (greater than) and fig4_ordered (greater or equal), row by row.
TABLE_1 = """\
A,B,C,D,E,F
1,1,1,0,0,0
1,1,1,0,0,0
1,1,1,0,0,0
0,0,0,1,1,0
0,0,0,1,1,0
0,0,0,0,0,1
"""
TABLE_2 = """\
A,B,C,D,E,F
1,1,1,1,1,1
0,1,1,1,1,1
0,0,1,1,1,1
0,0,0,1,1,1
0,0,0,0,1,1
0,0,0,0,0,1
"""
TABLE_3 = """\
A,B,C,D,E,F
1,1,1,1,1,1
1,1,1,1,1,1
1,1,1,1,1,1
0,0,0,1,1,1
0,0,0,1,1,1
0,0,0,0,0,1
"""


def ids(n, prefix="e"):
    return [f"{prefix}{i}" for i in range(n)]


def random_classes(rng, elements, max_classes):
    k = rng.randint(1, max_classes)
    groups = [[] for _ in range(k)]
    for x in elements:
        groups[rng.randrange(k)].append(x)
    groups = [g for g in groups if g]
    rng.shuffle(groups)
    return groups


def random_partition_pair(rng, n_max=20, k_max=6, n_min=2):
    universe = ids(rng.randint(n_min, n_max))
    return (
        Partition(tuple(random_classes(rng, universe, k_max))),
        Partition(tuple(random_classes(rng, universe, k_max))),
    )


def random_refinement_pair(rng, n_max=20, k_max=6):
    """(finer, coarser): the finer partition splits classes of the coarser one."""
    universe = ids(rng.randint(2, n_max))
    coarse = random_classes(rng, universe, k_max)
    fine = []
    for cls in coarse:
        fine.extend(random_classes(rng, cls, len(cls)))
    return Partition(tuple(fine)), Partition(tuple(coarse))


def random_ordered_pair(rng, n_max=50, k_max=8):
    """Two ordered partitions over overlapping but not necessarily equal universes."""
    pool = ids(rng.randint(1, n_max))
    u1 = [x for x in pool if rng.random() < 0.8] or pool[:1]
    u2 = [x for x in pool if rng.random() < 0.8] or pool[-1:]
    return (
        OrderedPartition(tuple(random_classes(rng, u1, k_max))),
        OrderedPartition(tuple(random_classes(rng, u2, k_max))),
    )


def random_chain_pair(rng, n_max=20):
    pool = ids(rng.randint(1, n_max))
    s1 = rng.sample(pool, rng.randint(1, len(pool)))
    s2 = rng.sample(pool, rng.randint(1, len(pool)))
    if not set(s1) & set(s2):
        s2.append(s1[0])
    return Chain(tuple(s1)), Chain(tuple(s2))


def random_vc(rng, universe, max_chains=6):
    chains = random_classes(rng, universe, max_chains)
    for c in chains:
        rng.shuffle(c)
    return PartitionOfChains(tuple(tuple(c) for c in chains))


def random_vc_pair(rng, n_max=20, max_chains=6):
    universe = ids(rng.randint(2, n_max))
    return random_vc(rng, universe, max_chains), random_vc(rng, universe, max_chains)


def rngs(count, seed):
    base = random.Random(seed)
    return [random.Random(base.getrandbits(64)) for _ in range(count)]
