"""Shared fixtures.

Two hand-checkable six-node graphs, each a pair of triangles joined by a
bridge, so each has exactly nine spanning trees.

``nine_basis_instance`` carries weights and three categories per edge; the
full basis table below was worked out by hand and is frozen here as ground
truth for the solvers.

``trap_matroids`` pairs the same graph shape with a partition matroid whose
common independent sets have inclusion-maximal members of different sizes;
the four-element ``TRAP_LOCAL_MAX`` cannot be extended although a
five-element common independent set exists.
"""

from __future__ import annotations

import pytest

from ordmatroid import GraphicMatroid, PartitionMatroid, make_instance

# edge ids:          0      1      2      3      4      5      6
NINE_EDGES = ((0, 2), (1, 2), (0, 1), (2, 3), (3, 4), (3, 5), (4, 5))
NINE_WEIGHTS = (1, 2, 4, 0, 5, 3, 6)
NINE_CATEGORIES = (3, 2, 1, 2, 2, 3, 1)

# basis members -> (weight, ordinal vector, cmin, cmax); all nine bases
NINE_BASIS_TABLE = {
    (0, 1, 3, 4, 5): (11, (2, 2, 2, 3, 3), (2, 3, 0), (0, 3, 2)),
    (0, 1, 3, 5, 6): (12, (1, 2, 2, 3, 3), (2, 2, 1), (1, 2, 2)),
    (0, 2, 3, 4, 5): (13, (1, 2, 2, 3, 3), (2, 2, 1), (1, 2, 2)),
    (0, 1, 3, 4, 6): (14, (1, 2, 2, 2, 3), (1, 3, 1), (1, 3, 1)),
    (1, 2, 3, 4, 5): (14, (1, 2, 2, 2, 3), (1, 3, 1), (1, 3, 1)),
    (0, 2, 3, 5, 6): (14, (1, 1, 2, 3, 3), (2, 1, 2), (2, 1, 2)),
    (1, 2, 3, 5, 6): (15, (1, 1, 2, 2, 3), (1, 2, 2), (2, 2, 1)),
    (0, 2, 3, 4, 6): (16, (1, 1, 2, 2, 3), (1, 2, 2), (2, 2, 1)),
    (1, 2, 3, 4, 6): (17, (1, 1, 2, 2, 2), (0, 3, 2), (2, 3, 0)),
}

# expected non-dominated outcome vectors (weight, ordinal vector) per mode
NINE_ND_ORDINAL = {
    (11, (2, 2, 2, 3, 3)),
    (12, (1, 2, 2, 3, 3)),
    (14, (1, 2, 2, 2, 3)),
    (14, (1, 1, 2, 3, 3)),
    (15, (1, 1, 2, 2, 3)),
    (17, (1, 1, 2, 2, 2)),
}
NINE_ND_LEXMIN = {
    (11, (2, 2, 2, 3, 3)),
    (12, (1, 2, 2, 3, 3)),
    (14, (1, 2, 2, 2, 3)),
    (15, (1, 1, 2, 2, 3)),
    (17, (1, 1, 2, 2, 2)),
}
NINE_ND_LEXMAX = {
    (11, (2, 2, 2, 3, 3)),
    (12, (1, 2, 2, 3, 3)),
    (14, (1, 1, 2, 3, 3)),
    (15, (1, 1, 2, 2, 3)),
    (17, (1, 1, 2, 2, 2)),
}

TRAP_EDGES = NINE_EDGES  # same shape, categorised by colour instead
TRAP_GREEN = (2, 4, 5)
TRAP_RED = (0, 1, 3, 6)
TRAP_CAPACITIES = (3, 2)
TRAP_LOCAL_MAX = (0, 1, 4, 5)
TRAP_LARGER = (0, 2, 3, 4, 5)


@pytest.fixture(scope="session")
def nine_graph():
    return GraphicMatroid(node_count=6, edges=NINE_EDGES)


@pytest.fixture(scope="session")
def nine_basis_instance(nine_graph):
    return make_instance(nine_graph, NINE_WEIGHTS, [NINE_CATEGORIES], [3])


@pytest.fixture(scope="session")
def trap_matroids(nine_graph):
    m2 = PartitionMatroid(blocks=(TRAP_GREEN, TRAP_RED), capacities=TRAP_CAPACITIES)
    return nine_graph, m2


def outcome_keys(points):
    return {(p.weight, p.ordinals[0]) for p in points}
