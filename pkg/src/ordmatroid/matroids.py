"""Ground sets and independence oracles for graphic, partition and uniform matroids.

Elements are dense 0-based integer ids.  For a graphic matroid the id indexes
an edge list, so parallel edges are distinct elements; self-loops are rejected
at construction because a one-element cycle can never be independent.

All matroid objects are immutable after construction and every function in
this module is a pure function of its inputs, so they are safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .errors import InputError

MAX_GROUND_SIZE = 1 << 16

ElementSet = tuple[int, ...]


class UnionFind:
    """Array union-find with path compression and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets containing a and b; False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class GraphicMatroid:
    """Acyclic edge sets of an undirected multigraph.

    ``edges[i]`` gives the endpoints of element ``i``.  Parallel edges are
    allowed, self-loops are not.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.node_count < 0:
            raise InputError("node_count must be non-negative")
        _check_ground_size(len(self.edges))
        for idx, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.node_count and 0 <= b < self.node_count):
                raise InputError(f"edge {idx} endpoint out of range")
            if a == b:
                raise InputError(f"edge {idx} is a self-loop")

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_independent(self, members: Sequence[int]) -> bool:
        uf = UnionFind(self.node_count)
        for e in members:
            a, b = self.edges[e]
            if not uf.union(a, b):
                return False
        return True


@dataclass(frozen=True)
class PartitionMatroid:
    """Sets meeting every block of a partition within its capacity.

    ``blocks`` must be disjoint and cover ``{0, ..., size-1}``; empty blocks
    are permitted so callers can keep one block per category even when a
    category is unused.
    """

    blocks: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]
    block_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.blocks) != len(self.capacities):
            raise InputError("capacities length must equal block count")
        if any(c < 0 for c in self.capacities):
            raise InputError("capacities must be non-negative")
        n = sum(len(b) for b in self.blocks)
        _check_ground_size(n)
        block_of = [-1] * n
        for i, block in enumerate(self.blocks):
            for e in block:
                if not 0 <= e < n:
                    raise InputError(f"element id {e} out of range")
                if block_of[e] != -1:
                    raise InputError(f"element id {e} appears in two blocks")
                block_of[e] = i
        # disjointness plus the total count implies the blocks cover the range
        object.__setattr__(self, "block_of", tuple(block_of))

    @property
    def size(self) -> int:
        return len(self.block_of)

    def is_independent(self, members: Sequence[int]) -> bool:
        counts = [0] * len(self.blocks)
        for e in members:
            counts[self.block_of[e]] += 1
        return all(c <= cap for c, cap in zip(counts, self.capacities))


@dataclass(frozen=True)
class UniformMatroid:
    """All subsets of at most ``k`` of ``size`` elements."""

    size: int
    k: int

    def __post_init__(self):
        _check_ground_size(self.size)
        if not 0 <= self.k <= self.size:
            raise InputError("uniform matroid needs 0 <= k <= size")

    def is_independent(self, members: Sequence[int]) -> bool:
        return len(members) <= self.k


Matroid = Union[GraphicMatroid, PartitionMatroid, UniformMatroid]


def _check_ground_size(n: int) -> None:
    if n > MAX_GROUND_SIZE:
        raise InputError(f"ground sets above {MAX_GROUND_SIZE} elements are not supported")


def check_members(m: Matroid, members: Iterable[int]) -> ElementSet:
    """Normalize an element collection to a sorted tuple, validating ids."""
    out = tuple(sorted(members))
    for e in out:
        if not 0 <= e < m.size:
            raise InputError(f"element id {e} out of range for ground set of {m.size}")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise InputError(f"duplicate element id {a}")
    return out


def is_independent(m: Matroid, members: Iterable[int]) -> bool:
    """Independence oracle for any supported matroid kind."""
    return m.is_independent(check_members(m, members))


def extend_greedily(m: Matroid, members: Iterable[int], order: Sequence[int]) -> ElementSet:
    """Grow an independent set to a maximal one, trying elements in ``order``.

    Raises InputError if ``members`` is not independent or ``order`` is not a
    permutation of the ground set.
    """
    start = check_members(m, members)
    if not m.is_independent(start):
        raise InputError("starting set is not independent")
    if len(order) != m.size or set(order) != set(range(m.size)):
        raise InputError("order must be a permutation of the ground set")
    grow = _incremental_builder(m, start)
    current = set(start)
    for e in order:
        if e not in current and grow(e):
            current.add(e)
    return tuple(sorted(current))


def rank(m: Matroid) -> int:
    """Common cardinality of all maximal independent sets."""
    return len(extend_greedily(m, (), range(m.size)))


def exchange_witness(m: Matroid, b1: Iterable[int], b2: Iterable[int], e1: int) -> int:
    """Return some e2 in b2 - b1 such that b1 - e1 + e2 is again a basis.

    Existence is guaranteed by the basis exchange property; the witness is
    found by scanning b2 - b1 in ascending id order.
    """
    t1 = check_members(m, b1)
    t2 = check_members(m, b2)
    r = rank(m)
    if len(t1) != r or not m.is_independent(t1):
        raise InputError("b1 is not a basis")
    if len(t2) != r or not m.is_independent(t2):
        raise InputError("b2 is not a basis")
    if e1 not in t1 or e1 in t2:
        raise InputError("e1 must lie in b1 and not in b2")
    base = [e for e in t1 if e != e1]
    in_b1 = set(t1)
    for e2 in t2:
        if e2 in in_b1:
            continue
        if m.is_independent(tuple(sorted(base + [e2]))):
            return e2
    raise AssertionError("basis exchange property violated; matroid inputs are inconsistent")


def _incremental_builder(m: Matroid, start: ElementSet) -> Callable[[int], bool]:
    """Stateful tester used by the greedy kernel: accept(e) adds e if possible."""
    if isinstance(m, GraphicMatroid):
        uf = UnionFind(m.node_count)
        for e in start:
            uf.union(*m.edges[e])

        def accept_graphic(e: int) -> bool:
            a, b = m.edges[e]
            return uf.union(a, b)

        return accept_graphic
    if isinstance(m, PartitionMatroid):
        counts = [0] * len(m.blocks)
        for e in start:
            counts[m.block_of[e]] += 1

        def accept_partition(e: int) -> bool:
            i = m.block_of[e]
            if counts[i] < m.capacities[i]:
                counts[i] += 1
                return True
            return False

        return accept_partition

    taken = [len(start)]

    def accept_uniform(_e: int) -> bool:
        if taken[0] < m.k:
            taken[0] += 1
            return True
        return False

    return accept_uniform


def addition_tester(m: Matroid, members: ElementSet) -> Callable[[int], bool]:
    """can_add(x): is members + x independent?  members must be independent."""
    if isinstance(m, GraphicMatroid):
        uf = UnionFind(m.node_count)
        for e in members:
            uf.union(*m.edges[e])

        def can_add_graphic(x: int) -> bool:
            a, b = m.edges[x]
            return uf.find(a) != uf.find(b)

        return can_add_graphic
    if isinstance(m, PartitionMatroid):
        counts = [0] * len(m.blocks)
        for e in members:
            counts[m.block_of[e]] += 1

        def can_add_partition(x: int) -> bool:
            i = m.block_of[x]
            return counts[i] < m.capacities[i]

        return can_add_partition

    room = len(members) < m.k
    return lambda _x: room


def swap_tester(m: Matroid, members: ElementSet) -> Callable[[int, int], bool]:
    """can_swap(y, x): is members - y + x independent, for y inside, x outside?

    For graphic matroids the union-find structure of members - y is cached per
    y, so probing all candidate x against one y costs near-linear total time.
    """
    if isinstance(m, GraphicMatroid):
        cache: dict[int, UnionFind] = {}

        def can_swap_graphic(y: int, x: int) -> bool:
            uf = cache.get(y)
            if uf is None:
                uf = UnionFind(m.node_count)
                for e in members:
                    if e != y:
                        uf.union(*m.edges[e])
                cache[y] = uf
            a, b = m.edges[x]
            return uf.find(a) != uf.find(b)

        return can_swap_graphic
    if isinstance(m, PartitionMatroid):
        counts = [0] * len(m.blocks)
        for e in members:
            counts[m.block_of[e]] += 1
        block_of, caps = m.block_of, m.capacities

        def can_swap_partition(y: int, x: int) -> bool:
            bx = block_of[x]
            return bx == block_of[y] or counts[bx] < caps[bx]

        return can_swap_partition

    # |members - y + x| == |members| <= k whenever members is independent
    return lambda _y, _x: True
