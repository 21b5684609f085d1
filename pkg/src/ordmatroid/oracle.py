"""Exhaustive ground truth for small instances.

Depth-first enumeration of all bases with independence pruning, plus direct
computation of the non-dominated sets by evaluating every basis.  Intended
for verification only; the element cap keeps accidental blow-ups out.
"""

from __future__ import annotations

from .errors import ResourceLimitError
from .instance import Instance
from .matroids import Matroid, addition_tester, rank
from .orders import OutcomePoint, filter_nondominated, outcome_of

ENUMERATION_CAP = 24


def enumerate_bases(m: Matroid) -> list[tuple[int, ...]]:
    """All maximal independent sets, in lexicographic order of their id tuples."""
    n = m.size
    if n > ENUMERATION_CAP:
        raise ResourceLimitError(
            f"basis enumeration is capped at {ENUMERATION_CAP} elements, got {n}"
        )
    r = rank(m)
    out: list[tuple[int, ...]] = []

    def dfs(start: int, current: list[int]) -> None:
        if len(current) == r:
            out.append(tuple(current))
            return
        if len(current) + (n - start) < r:
            return
        can_add = addition_tester(m, tuple(current))
        for e in range(start, n):
            if can_add(e):
                current.append(e)
                dfs(e + 1, current)
                current.pop()

    dfs(0, [])
    return out


def oracle_nd(instance: Instance, mode: str = "ordinal") -> list[OutcomePoint]:
    """Non-dominated set computed by evaluating every basis."""
    points = [outcome_of(instance, basis) for basis in enumerate_bases(instance.matroid)]
    return filter_nondominated(points, mode, instance.num_categories)
