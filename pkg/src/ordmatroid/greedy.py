"""Greedy solvers for the single-objective matroid problems.

For one ordinal objective on a matroid the non-dominated set is a single
outcome vector, reached by growing a basis with the best categories first.
The same kernel with weight-ascending order yields a minimum-weight basis.
"""

from __future__ import annotations

from .errors import InputError
from .instance import Instance
from .matroids import extend_greedily
from .orders import OutcomePoint, outcome_of


def greedy_ordinal_basis(instance: Instance, objective_index: int = 0) -> OutcomePoint:
    """Basis whose ordinal vector is the unique non-dominated profile.

    Elements are tried in ascending category order, ties broken by id, which
    makes runs deterministic; the resulting outcome vector does not depend on
    the tie-breaking.
    """
    if instance.rank == 0:
        raise InputError("the matroid has rank 0, there is no non-empty basis")
    cats = instance.ordinals[objective_index]
    order = sorted(range(instance.size), key=lambda e: (cats[e], e))
    basis = extend_greedily(instance.matroid, (), order)
    return outcome_of(instance, basis)


def min_weight_basis(instance: Instance) -> OutcomePoint:
    """Minimum-weight basis via the classic weight-ascending greedy pass."""
    order = sorted(range(instance.size), key=lambda e: (instance.weights[e], e))
    basis = extend_greedily(instance.matroid, (), order)
    return outcome_of(instance, basis)
