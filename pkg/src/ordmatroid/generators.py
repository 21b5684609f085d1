"""Random instance generators for benchmarking and verification sweeps.

Streams come from numpy's PCG64 generator seeded with a 64-bit integer, so a
fixed seed reproduces an instance byte for byte on any platform; the exact
generator is part of the documented behaviour.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError
from .instance import Instance, make_instance
from .matroids import GraphicMatroid, PartitionMatroid

CAPACITY_SAMPLING_TRIES = 1000


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_graphic(n: int, m: int, num_categories: int, seed: int, objectives: int = 1) -> Instance:
    """Connected random multigraph instance with ``n`` nodes and ``m`` edges.

    A random spanning tree (random permutation, each node attached to a
    random earlier one) guarantees connectivity; the remaining m-n+1 edges
    are uniform random pairs, so parallel edges may occur.  Weights are
    uniform in 1..2m and categories uniform in 1..K per objective.
    """
    if n < 2:
        raise InputError("need at least two nodes")
    if m < n - 1:
        raise InputError("a connected graph needs at least n-1 edges")
    rng = _rng(seed)
    perm = [int(x) for x in rng.permutation(n)]
    edges = []
    for i in range(1, n):
        j = int(rng.integers(0, i))
        a, b = perm[i], perm[j]
        edges.append((min(a, b), max(a, b)))
    while len(edges) < m:
        a = int(rng.integers(0, n))
        b = int(rng.integers(0, n))
        if a == b:
            continue
        edges.append((min(a, b), max(a, b)))
    matroid = GraphicMatroid(node_count=n, edges=tuple(edges))
    weights = [int(x) for x in rng.integers(1, 2 * m + 1, size=m)]
    ordinals = [
        [int(x) for x in rng.integers(1, num_categories + 1, size=m)] for _ in range(objectives)
    ]
    return make_instance(matroid, weights, ordinals, [num_categories] * objectives)


def gen_partition(n: int, num_categories: int, seed: int, objectives: int = 1) -> Instance:
    """Partition matroid instance over ``n`` elements in three blocks.

    Capacities are sampled until they sum to n/2 with each capacity within
    its block size, so every basis has n/2 elements and the instance is
    feasible by construction; after a bounded number of tries the sampler
    falls back to near-equal capacities.  Weights are uniform in 1..10n and
    categories uniform in 1..K per objective.
    """
    if n % 2 != 0:
        raise InputError("the element count must be even")
    if n < 6:
        raise InputError("need at least six elements for three blocks")
    rng = _rng(seed)
    base, extra = divmod(n, 3)
    sizes = [base + (1 if i < extra else 0) for i in range(3)]
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    target = n // 2
    capacities = None
    for _ in range(CAPACITY_SAMPLING_TRIES):
        draw = [int(rng.integers(0, s + 1)) for s in sizes]
        if sum(draw) == target:
            capacities = draw
            break
    if capacities is None:
        capacities = _near_equal_capacities(sizes, target)
    matroid = PartitionMatroid(blocks=tuple(blocks), capacities=tuple(capacities))
    weights = [int(x) for x in rng.integers(1, 10 * n + 1, size=n)]
    ordinals = [
        [int(x) for x in rng.integers(1, num_categories + 1, size=n)] for _ in range(objectives)
    ]
    return make_instance(matroid, weights, ordinals, [num_categories] * objectives)


def _near_equal_capacities(sizes: list[int], target: int) -> list[int]:
    caps = [0] * len(sizes)
    remaining = target
    while remaining > 0:
        progressed = False
        for i, s in enumerate(sizes):
            if remaining > 0 and caps[i] < s:
                caps[i] += 1
                remaining -= 1
                progressed = True
        if not progressed:
            raise InputError("blocks are too small to reach the target rank")
    return caps
