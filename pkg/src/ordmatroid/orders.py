"""Category profiles, dominance relations and non-dominated filtering.

An ordinal vector is the sorted tuple of category values of a basis, smaller
categories being preferred.  Its counting vector aggregates it to one count
per category, either with the best category first (``cmax`` orientation, for
lexicographic maximization of good elements) or reversed with the worst
category first (``cmin`` orientation, for lexicographic minimization of bad
elements).

Everything here is value-based and reentrant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import InputError

if TYPE_CHECKING:
    from .instance import Instance

OrdinalVector = tuple[int, ...]
CountingVector = tuple[int, ...]
BoundVector = tuple[int, ...]


class Dominance(enum.Enum):
    DOMINATES = "dominates"
    DOMINATED = "dominated"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class OutcomePoint:
    """One point of the outcome space plus a witness basis.

    ``ordinals`` holds one sorted category vector per ordinal objective.
    Two points with equal weight and equal ordinal vectors are the same
    outcome, regardless of their witnesses.
    """

    weight: int
    ordinals: tuple[OrdinalVector, ...]
    witness: tuple[int, ...]

    def key(self) -> tuple:
        return (self.weight, self.ordinals)


def ordinal_of(instance: "Instance", members: Iterable[int], objective_index: int = 0) -> OrdinalVector:
    """Sorted category multiset of a set of elements."""
    cats = instance.ordinals[objective_index]
    return tuple(sorted(cats[e] for e in members))


def outcome_of(instance: "Instance", members: Iterable[int]) -> OutcomePoint:
    """Evaluate a basis under the sum objective and every ordinal objective."""
    witness = tuple(sorted(members))
    return OutcomePoint(
        weight=instance.weight_of(witness),
        ordinals=tuple(ordinal_of(instance, witness, i) for i in range(instance.objective_count)),
        witness=witness,
    )


def counting_of(ov: Sequence[int], num_categories: int, orientation: str = "cmax") -> CountingVector:
    """Aggregate a category vector to per-category counts.

    ``cmax`` lists categories best-first, ``cmin`` is the exact reversal so
    that the worst category leads.
    """
    counts = [0] * num_categories
    for c in ov:
        if not 1 <= c <= num_categories:
            raise InputError(f"category {c} outside 1..{num_categories}")
        counts[c - 1] += 1
    if orientation == "cmax":
        return tuple(counts)
    if orientation == "cmin":
        return tuple(reversed(counts))
    raise InputError(f"unknown orientation {orientation!r}")


def pareto_compare(y1: Sequence[int], y2: Sequence[int]) -> Dominance:
    """Componentwise comparison of equal-length vectors, smaller preferred."""
    if len(y1) != len(y2):
        raise InputError("vectors must have equal length")
    le = all(a <= b for a, b in zip(y1, y2))
    ge = all(a >= b for a, b in zip(y1, y2))
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.DOMINATES
    if ge:
        return Dominance.DOMINATED
    return Dominance.INCOMPARABLE


def ordinal_compare(y1: Sequence[int], y2: Sequence[int]) -> Dominance:
    """Componentwise comparison of two sorted category vectors."""
    return pareto_compare(y1, y2)


def lex_compare(y1: Sequence[int], y2: Sequence[int]) -> int:
    """-1, 0 or +1 depending on the first differing component."""
    if len(y1) != len(y2):
        raise InputError("vectors must have equal length")
    for a, b in zip(y1, y2):
        if a != b:
            return -1 if a < b else 1
    return 0


def combined_dominates(p1: OutcomePoint, p2: OutcomePoint) -> bool:
    """True if p1 is at least as good as p2 in weight and in every ordinal
    objective, and not identical in outcome."""
    if p1.weight > p2.weight:
        return False
    for o1, o2 in zip(p1.ordinals, p2.ordinals):
        rel = ordinal_compare(o1, o2)
        if rel in (Dominance.DOMINATED, Dominance.INCOMPARABLE):
            return False
    return p1.key() != p2.key()


def eps_to_u(eps: Sequence[int], num_categories: int) -> BoundVector:
    """Count vector of a non-decreasing category constraint vector."""
    for a, b in zip(eps, eps[1:]):
        if a > b:
            raise InputError("constraint vector must be non-decreasing")
    return counting_of(eps, num_categories, "cmax")


def u_to_eps(u: Sequence[int]) -> OrdinalVector:
    """Inverse of eps_to_u: expand per-category counts to the sorted vector."""
    if any(x < 0 for x in u):
        raise InputError("counting vector entries must be non-negative")
    out: list[int] = []
    for cat, count in enumerate(u, start=1):
        out.extend([cat] * count)
    return tuple(out)


def enumerate_suitable_bounds(r: int, num_categories: int) -> list[BoundVector]:
    """All non-negative K-vectors summing to r.

    Listed in lexicographically increasing order of the reversed tuple
    ``(u_K, ..., u_1)``; the list length is C(r+K-1, K-1).
    """
    if r < 0 or num_categories < 1:
        raise InputError("need r >= 0 and at least one category")
    out: list[BoundVector] = []

    # recurse on the last coordinate first so (u_K, ..., u_1) ascends
    def rec(remaining: int, parts: int, rev_prefix: tuple[int, ...]) -> None:
        if parts == 1:
            out.append(tuple(reversed(rev_prefix + (remaining,))))
            return
        for head in range(remaining + 1):
            rec(remaining - head, parts - 1, rev_prefix + (head,))

    rec(r, num_categories, ())
    return out


def _dedupe(points: Iterable[OutcomePoint]) -> list[OutcomePoint]:
    seen: set[tuple] = set()
    out = []
    for p in points:
        k = p.key()
        if k not in seen:
            seen.add(k)
            out.append(p)
    return out


def filter_nondominated(
    points: Iterable[OutcomePoint],
    mode: str = "ordinal",
    num_categories: Sequence[int] | None = None,
) -> list[OutcomePoint]:
    """Reduce a point collection to its non-dominated subset.

    ``ordinal`` keeps the maximal antichain under the combined (weight,
    ordinal dominance) ordering.  ``lexmin`` and ``lexmax`` keep the points
    minimal under (weight, lexicographic counting) with the worst-first
    respectively best-first counting vector; these modes apply to instances
    with a single ordinal objective and need ``num_categories``.

    One witness is kept per distinct outcome vector, the first encountered.
    """
    pts = _dedupe(points)
    if mode == "ordinal":
        kept = []
        for p in pts:
            if not any(combined_dominates(q, p) for q in pts if q is not p):
                kept.append(p)
        return kept
    if mode not in ("lexmin", "lexmax"):
        raise InputError(f"unknown filter mode {mode!r}")
    if num_categories is None:
        raise InputError("lexmin/lexmax filtering needs num_categories")
    if any(len(p.ordinals) != 1 for p in pts):
        raise InputError("lexmin/lexmax filtering applies to single-objective points")
    k = num_categories[0]
    orientation = "cmin" if mode == "lexmin" else "cmax"
    counted = [(p, counting_of(p.ordinals[0], k, orientation)) for p in pts]
    if mode == "lexmin":
        counted.sort(key=lambda pc: (pc[0].weight, pc[1]))
        better = lambda c, best: lex_compare(c, best) < 0
    else:
        counted.sort(key=lambda pc: (pc[0].weight, tuple(-x for x in pc[1])))
        better = lambda c, best: lex_compare(c, best) > 0
    kept = []
    best: CountingVector | None = None
    for p, c in counted:
        if best is None or better(c, best):
            kept.append(p)
            best = c
    return kept
