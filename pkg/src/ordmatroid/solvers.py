"""Frontier solvers for a sum objective combined with ordinal objectives.

Every solver scans a family of category-count bounds, solves one scalarized
weighted matroid intersection per bound, keeps the full-rank results and
filters them down to the non-dominated set.  They differ in how the bound
family is chosen:

* :func:`mioc` scans every suitable bound (all non-negative K-vectors
  summing to the rank), which is the complete occupancy family.
* :func:`mioc_improved` first solves the fully relaxed bound to obtain a
  cheapest basis and then scans only suitable bounds that could still beat
  it in the worst-first counting order.
* :func:`mioc_lexmin` runs an incumbent-driven worklist for the problem that
  minimizes weight and lexicographically minimizes the worst-first counting
  vector; bounds are refined on the fly and pruned whenever a new incumbent
  improves the counting vector.
* :func:`mioc_lexmax` is the best-first counterpart; upper-bound vectors
  cannot force a basis to keep a prefix of good-category counts, so instead
  of a pruned worklist it scans every suitable bound that is lexicographically
  above the initial incumbent profile, which covers every candidate exactly.
* :func:`mioc_multi` handles several ordinal objectives at once by scanning
  exact count vectors over the joint-category refinement of the ground set.

The scans inside mioc and mioc_improved are independent per bound and could
run concurrently; mioc_lexmin is inherently sequential because of its
incumbent pruning.  All functions are pure.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import InputError, ResourceLimitError
from .instance import Instance
from .intersection import MIResult, solve_scalarization, weighted_intersection
from .matroids import PartitionMatroid
from .orders import (
    OutcomePoint,
    counting_of,
    enumerate_suitable_bounds,
    filter_nondominated,
    lex_compare,
    outcome_of,
)

SCALARIZATION_CAP = 1_000_000


class NondominatedSet(list):
    """List of non-dominated outcome points; ``iterations`` counts the
    scalarized subproblems the solver attempted."""

    def __init__(self, points: Iterable[OutcomePoint] = (), iterations: int = 0):
        super().__init__(points)
        self.iterations = iterations


def _require_single_objective(instance: Instance) -> None:
    if instance.objective_count != 1:
        raise InputError("this solver handles exactly one ordinal objective")


def _require_rank(instance: Instance) -> int:
    r = instance.rank
    if r == 0:
        raise InputError("the matroid has rank 0, there is no non-empty basis")
    return r


def _check_budget(count: int) -> None:
    if count > SCALARIZATION_CAP:
        raise ResourceLimitError(
            f"solve would need {count} scalarizations, above the cap of {SCALARIZATION_CAP}"
        )


def _suitable_bounds_within_budget(r: int, k: int) -> list[tuple[int, ...]]:
    _check_budget(math.comb(r + k - 1, k - 1))
    return enumerate_suitable_bounds(r, k)


def mioc(instance: Instance) -> NondominatedSet:
    """Non-dominated set under (weight, ordinal dominance), full bound scan."""
    _require_single_objective(instance)
    r = _require_rank(instance)
    bounds = _suitable_bounds_within_budget(r, instance.num_categories[0])
    found = []
    for u in bounds:
        res = solve_scalarization(instance, u)
        if res is not None:
            found.append(outcome_of(instance, res.members))
    points = filter_nondominated(found, "ordinal")
    return NondominatedSet(points, iterations=len(bounds))


def _solve_relaxed(instance: Instance, r: int) -> MIResult:
    res = solve_scalarization(instance, (r,) * instance.num_categories[0])
    if res is None:
        raise AssertionError("fully relaxed scalarization must reach full rank")
    return res


def _cmin(instance: Instance, members: tuple[int, ...]) -> tuple[int, ...]:
    point = outcome_of(instance, members)
    return counting_of(point.ordinals[0], instance.num_categories[0], "cmin")


def mioc_improved(instance: Instance) -> NondominatedSet:
    """Same non-dominated set as :func:`mioc` with a pruned bound scan.

    The cheapest basis bounds the useful region: only suitable bounds whose
    reversed form is lexicographically at most its worst-first counting
    vector can contribute a new non-dominated point.
    """
    _require_single_objective(instance)
    r = _require_rank(instance)
    first = _solve_relaxed(instance, r)
    incumbent_cmin = _cmin(instance, first.members)
    bounds = [
        u
        for u in _suitable_bounds_within_budget(r, instance.num_categories[0])
        if lex_compare(tuple(reversed(u)), incumbent_cmin) <= 0
    ]
    found = [outcome_of(instance, first.members)]
    for u in bounds:
        res = solve_scalarization(instance, u)
        if res is not None:
            found.append(outcome_of(instance, res.members))
    points = filter_nondominated(found, "ordinal")
    return NondominatedSet(points, iterations=len(bounds) + 1)


def _lexmin_children(cmin: tuple[int, ...], r: int) -> list[tuple[int, ...]]:
    """Bounds covering every counting vector lexicographically below ``cmin``.

    Child j keeps the worst j-1 counts of the incumbent, demands one less in
    the j-th worst category and leaves better categories unconstrained.  The
    last category is skipped; lowering it alone cannot reach a full basis.
    """
    k = len(cmin)
    children = []
    for j in range(k - 1):
        if cmin[j] == 0:
            continue
        reversed_child = cmin[:j] + (cmin[j] - 1,) + (r,) * (k - 1 - j)
        children.append(tuple(reversed(reversed_child)))
    return children


def mioc_lexmin(instance: Instance) -> NondominatedSet:
    """Non-dominated set of (min weight, lexmin worst-first counting vector).

    Worklist search: start from the cheapest basis, keep the open bounds
    sorted, always solve the bound whose counting region sits closest below
    the incumbent, and on every full-rank result prune bounds that can no
    longer contain an improving profile and enqueue the refined children of
    the new profile.
    """
    _require_single_objective(instance)
    r = _require_rank(instance)
    first = _solve_relaxed(instance, r)
    incumbent = _cmin(instance, first.members)
    found = [outcome_of(instance, first.members)]
    iterations = 1

    seen: set[tuple[int, ...]] = set()
    worklist: list[tuple[int, ...]] = []

    def push(bounds: Iterable[tuple[int, ...]]) -> None:
        fresh = [u for u in bounds if u not in seen]
        seen.update(fresh)
        worklist.extend(fresh)
        worklist.sort()

    push(_lexmin_children(incumbent, r))
    while worklist:
        u = worklist.pop(0)
        iterations += 1
        _check_budget(iterations)
        res = solve_scalarization(instance, u)
        if res is None:
            continue
        found.append(outcome_of(instance, res.members))
        cmin = _cmin(instance, res.members)
        if lex_compare(cmin, incumbent) < 0:
            incumbent = cmin
            worklist[:] = [
                v for v in worklist if lex_compare(tuple(reversed(v)), incumbent) <= 0
            ]
            push(_lexmin_children(incumbent, r))
    points = filter_nondominated(found, "lexmin", instance.num_categories)
    return NondominatedSet(points, iterations=iterations)


def mioc_lexmax(instance: Instance) -> NondominatedSet:
    """Non-dominated set of (min weight, lexmax best-first counting vector).

    After the relaxed solve fixes the cheapest basis, every remaining
    candidate profile is a suitable bound lexicographically above that basis'
    best-first counting vector, and solving a suitable bound pins the counts
    exactly; scanning that region is therefore complete.
    """
    _require_single_objective(instance)
    r = _require_rank(instance)
    k = instance.num_categories[0]
    first = _solve_relaxed(instance, r)
    first_point = outcome_of(instance, first.members)
    baseline = counting_of(first_point.ordinals[0], k, "cmax")
    bounds = [u for u in _suitable_bounds_within_budget(r, k) if lex_compare(u, baseline) > 0]
    found = [first_point]
    for u in sorted(bounds):
        res = solve_scalarization(instance, u)
        if res is not None:
            found.append(outcome_of(instance, res.members))
    points = filter_nondominated(found, "lexmax", instance.num_categories)
    return NondominatedSet(points, iterations=len(bounds) + 1)


def joint_category_blocks(instance: Instance) -> tuple[tuple[int, ...], ...]:
    """Refine the ground set by the tuple of categories across objectives.

    Capacity constraints per objective and category overlap between
    objectives, which breaks the partition structure; exact counts on the
    refined blocks keep every scalarization a genuine partition matroid and
    reach the same set of profiles.
    """
    profiles = sorted({tuple(cats[e] for cats in instance.ordinals) for e in range(instance.size)})
    index = {p: i for i, p in enumerate(profiles)}
    blocks: list[list[int]] = [[] for _ in profiles]
    for e in range(instance.size):
        blocks[index[tuple(cats[e] for cats in instance.ordinals)]].append(e)
    return tuple(tuple(b) for b in blocks)


def mioc_multi(instance: Instance) -> NondominatedSet:
    """Non-dominated set for several ordinal objectives plus the sum objective.

    Scans every exact count vector over the joint-category blocks; each scan
    solves a weighted intersection with the corresponding partition matroid,
    and full-rank results are filtered under the combined ordering.
    """
    r = _require_rank(instance)
    if any(k < 1 for k in instance.num_categories):
        raise InputError("every objective needs at least one category")
    blocks = joint_category_blocks(instance)
    bounds = _suitable_bounds_within_budget(r, len(blocks))
    found = []
    for v in bounds:
        m2 = PartitionMatroid(blocks, v)
        res = weighted_intersection(instance.matroid, m2, instance.weights)
        if res.cardinality == r:
            found.append(outcome_of(instance, res.members))
    points = filter_nondominated(found, "ordinal")
    return NondominatedSet(points, iterations=len(bounds))
