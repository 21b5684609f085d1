"""Weighted matroid intersection via cheapest augmenting paths.

Given two matroids over the same ground set, the solver returns a common
independent set of maximum cardinality that has minimum total weight among
all common independent sets of that cardinality.  It maintains the invariant
that after k augmentations the current set is a cheapest common independent
set of size k.

The exchange graph over the current set I has an arc y -> x (y inside, x
outside) whenever I - y + x stays independent in the first matroid, and an
arc x -> y whenever I - y + x stays independent in the second.  Sources are
the outside elements addable to I in the first matroid, sinks those addable
in the second.  Node costs are +w(x) for outside and -w(y) for inside
elements, so the cost of a source-to-sink path equals the weight change of
the corresponding symmetric-difference augmentation.  Among all augmenting
paths the solver picks one of minimum cost, then fewest arcs, then smallest
node sequence; the arc-count tie-break is required for correctness, the last
one only pins determinism.

Paths are found by label correction (Bellman-Ford family), which tolerates
the negative node costs of inside elements.  Each call works on private
state, so concurrent solves on shared matroids are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .instance import Instance
from .matroids import Matroid, PartitionMatroid, addition_tester, swap_tester

Label = tuple[int, int, tuple[int, ...]]  # cost, arc count, node sequence


@dataclass(frozen=True)
class MIResult:
    """A common independent set plus the cheapest weight at every size.

    ``stage_weights[k]`` is the total weight right after cardinality k was
    reached; it is the minimum weight over all common independent sets of
    size k.
    """

    members: tuple[int, ...]
    cardinality: int
    weight: int
    stage_weights: tuple[int, ...]


def weighted_intersection(m1: Matroid, m2: Matroid, weights: Sequence[int]) -> MIResult:
    """Minimum-weight maximum-cardinality common independent set."""
    if m1.size != m2.size:
        raise InputError("both matroids must share one ground set")
    if len(weights) != m1.size:
        raise InputError("weights length must match the ground set")
    if any(w < 0 for w in weights):
        raise InputError("weights must be non-negative")

    members: tuple[int, ...] = ()
    stage_weights = [0]
    while True:
        path = _cheapest_augmenting_path(m1, m2, members, weights)
        if path is None:
            break
        inside = set(members)
        inside.symmetric_difference_update(path)
        members = tuple(sorted(inside))
        if len(members) != len(stage_weights):
            raise AssertionError("augmentation did not grow the set by one")
        stage_weights.append(stage_weights[-1] + _path_cost(path, members, weights))
        if not (m1.is_independent(members) and m2.is_independent(members)):
            raise AssertionError("augmentation lost common independence")
    return MIResult(
        members=members,
        cardinality=len(members),
        weight=stage_weights[-1],
        stage_weights=tuple(stage_weights),
    )


def _path_cost(path: tuple[int, ...], new_members: tuple[int, ...], weights: Sequence[int]) -> int:
    inside = set(new_members)
    return sum(weights[e] if e in inside else -weights[e] for e in path)


def _cheapest_augmenting_path(
    m1: Matroid,
    m2: Matroid,
    members: tuple[int, ...],
    weights: Sequence[int],
) -> tuple[int, ...] | None:
    n = m1.size
    inside = set(members)
    outside = [x for x in range(n) if x not in inside]
    if not outside:
        return None

    can_add1 = addition_tester(m1, members)
    can_add2 = addition_tester(m2, members)
    sources = [x for x in outside if can_add1(x)]
    sinks = {x for x in outside if can_add2(x)}
    if not sources or not sinks:
        return None

    cost = [weights[e] if e not in inside else -weights[e] for e in range(n)]
    out_arcs: list[list[int]] = [[] for _ in range(n)]
    if members:
        can_swap1 = swap_tester(m1, members)
        can_swap2 = swap_tester(m2, members)
        for y in members:
            for x in outside:
                if can_swap1(y, x):
                    out_arcs[y].append(x)
                if can_swap2(y, x):
                    out_arcs[x].append(y)

    labels: list[Label | None] = [None] * n
    frontier = []
    for x in sorted(sources):
        labels[x] = (cost[x], 0, (x,))
        frontier.append(x)

    # paths never need more than n arcs; one extra pass detects the negative
    # cycles the extremality invariant rules out
    for _round in range(n + 1):
        if not frontier:
            break
        if _round == n:
            raise AssertionError("negative cycle in exchange graph; invariant broken")
        touched: set[int] = set()
        for a in frontier:
            la = labels[a]
            assert la is not None
            base_cost, base_arcs, base_path = la
            for b in out_arcs[a]:
                cand = (base_cost + cost[b], base_arcs + 1, base_path + (b,))
                lb = labels[b]
                if lb is None or cand < lb:
                    labels[b] = cand
                    touched.add(b)
        frontier = sorted(touched)

    best: Label | None = None
    for t in sorted(sinks):
        lt = labels[t]
        if lt is not None and (best is None or lt < best):
            best = lt
    return best[2] if best is not None else None


def category_blocks(instance: Instance, objective_index: int = 0) -> tuple[tuple[int, ...], ...]:
    """Ground-set partition into one block per category of one objective."""
    k = instance.num_categories[objective_index]
    cats = instance.ordinals[objective_index]
    blocks: list[list[int]] = [[] for _ in range(k)]
    for e, c in enumerate(cats):
        blocks[c - 1].append(e)
    return tuple(tuple(b) for b in blocks)


def solve_scalarization(
    instance: Instance,
    bound: Sequence[int],
    objective_index: int = 0,
) -> MIResult | None:
    """Cheapest basis whose per-category counts stay within ``bound``.

    The bound acts as capacities of a partition matroid over the category
    blocks; the weighted intersection with the instance matroid then yields
    the cheapest common independent set of maximum cardinality.  A result of
    full rank solves the scalarized subproblem; anything smaller means no
    basis satisfies the bound, reported as None rather than an error.
    """
    r = instance.rank
    k = instance.num_categories[objective_index]
    if len(bound) != k:
        raise InputError("bound length must equal the number of categories")
    if any(not 0 <= b <= r for b in bound):
        raise InputError("bound entries must lie in 0..rank")
    m2 = PartitionMatroid(category_blocks(instance, objective_index), tuple(int(b) for b in bound))
    result = weighted_intersection(instance.matroid, m2, instance.weights)
    return result if result.cardinality == r else None
