"""Matroid optimization with one sum objective and ordinal category objectives.

The package provides independence oracles for graphic, partition and uniform
matroids, ordering relations for sorted category vectors and their counting
aggregations, greedy solvers for the single-objective problems, a weighted
matroid intersection engine, enumeration solvers for the non-dominated sets
of the combined problems, a brute-force verification oracle, and random
instance generators with a benchmark harness.
"""

from .errors import InputError, ResourceLimitError
from .generators import gen_graphic, gen_partition
from .greedy import greedy_ordinal_basis, min_weight_basis
from .instance import Instance, from_json, load, make_instance, save, to_json
from .intersection import MIResult, solve_scalarization, weighted_intersection
from .matroids import (
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    exchange_witness,
    extend_greedily,
    is_independent,
    rank,
)
from .oracle import enumerate_bases, oracle_nd
from .orders import (
    Dominance,
    OutcomePoint,
    combined_dominates,
    counting_of,
    enumerate_suitable_bounds,
    eps_to_u,
    filter_nondominated,
    lex_compare,
    ordinal_compare,
    ordinal_of,
    outcome_of,
    pareto_compare,
    u_to_eps,
)
from .solvers import (
    NondominatedSet,
    mioc,
    mioc_improved,
    mioc_lexmax,
    mioc_lexmin,
    mioc_multi,
)

__all__ = [
    "Dominance",
    "GraphicMatroid",
    "InputError",
    "Instance",
    "MIResult",
    "Matroid",
    "NondominatedSet",
    "OutcomePoint",
    "PartitionMatroid",
    "ResourceLimitError",
    "UniformMatroid",
    "combined_dominates",
    "counting_of",
    "enumerate_bases",
    "enumerate_suitable_bounds",
    "eps_to_u",
    "exchange_witness",
    "extend_greedily",
    "filter_nondominated",
    "from_json",
    "gen_graphic",
    "gen_partition",
    "greedy_ordinal_basis",
    "is_independent",
    "lex_compare",
    "load",
    "make_instance",
    "min_weight_basis",
    "mioc",
    "mioc_improved",
    "mioc_lexmax",
    "mioc_lexmin",
    "mioc_multi",
    "oracle_nd",
    "ordinal_compare",
    "ordinal_of",
    "outcome_of",
    "pareto_compare",
    "rank",
    "save",
    "solve_scalarization",
    "to_json",
    "u_to_eps",
    "weighted_intersection",
]

__version__ = "0.1.0"
