"""Problem instances: a matroid, a sum objective and ordinal category objectives.

The on-disk format is a UTF-8 JSON document::

    {
      "matroid": {"kind": "graphic", "nodes": 6, "edges": [[0, 2], [1, 2], ...]}
                 | {"kind": "partition", "blocks": [[0, 1], [2, 3, 4]], "capacities": [1, 2]}
                 | {"kind": "uniform", "k": 3},
      "weights": [w_0, ...],
      "ordinal": [[o1_0, o1_1, ...], ...],
      "num_categories": [K_1, ...]
    }

Weights are non-negative integers.  Category values range over ``1..K_i`` with
1 the most preferred category.  ``ordinal`` holds one list per ordinal
objective, each assigning a category to every ground-set element.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import InputError
from .matroids import (
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    rank,
)


@dataclass(frozen=True)
class Instance:
    matroid: Matroid
    weights: tuple[int, ...]
    ordinals: tuple[tuple[int, ...], ...]
    num_categories: tuple[int, ...]

    def __post_init__(self):
        n = self.matroid.size
        if len(self.weights) != n:
            raise InputError("weights length must match the ground set")
        if any(w < 0 for w in self.weights):
            raise InputError("weights must be non-negative")
        if len(self.ordinals) != len(self.num_categories):
            raise InputError("one num_categories entry is required per ordinal objective")
        if not self.ordinals:
            raise InputError("at least one ordinal objective is required")
        for cats, k in zip(self.ordinals, self.num_categories):
            if k < 1:
                raise InputError("every objective needs at least one category")
            if len(cats) != n:
                raise InputError("ordinal assignment length must match the ground set")
            if any(not 1 <= c <= k for c in cats):
                raise InputError("category values must lie in 1..K")

    @property
    def size(self) -> int:
        return self.matroid.size

    @property
    def objective_count(self) -> int:
        return len(self.ordinals)

    @property
    def rank(self) -> int:
        return _cached_rank(self.matroid)

    def weight_of(self, members: Sequence[int]) -> int:
        return sum(self.weights[e] for e in members)


@functools.lru_cache(maxsize=None)
def _cached_rank(m: Matroid) -> int:
    return rank(m)


def make_instance(
    matroid: Matroid,
    weights: Sequence[int],
    ordinals: Sequence[Sequence[int]],
    num_categories: Sequence[int],
) -> Instance:
    return Instance(
        matroid=matroid,
        weights=tuple(int(w) for w in weights),
        ordinals=tuple(tuple(int(c) for c in cats) for cats in ordinals),
        num_categories=tuple(int(k) for k in num_categories),
    )


def matroid_to_obj(m: Matroid) -> dict[str, Any]:
    if isinstance(m, GraphicMatroid):
        return {"kind": "graphic", "nodes": m.node_count, "edges": [list(e) for e in m.edges]}
    if isinstance(m, PartitionMatroid):
        return {
            "kind": "partition",
            "blocks": [list(b) for b in m.blocks],
            "capacities": list(m.capacities),
        }
    return {"kind": "uniform", "k": m.k}


def matroid_from_obj(obj: dict[str, Any], ground_size: int | None = None) -> Matroid:
    """Decode a matroid object; uniform matroids take their ground-set size
    from the surrounding document (the weights list) unless given explicitly."""
    try:
        kind = obj["kind"]
        if kind == "graphic":
            return GraphicMatroid(
                node_count=int(obj["nodes"]),
                edges=tuple((int(a), int(b)) for a, b in obj["edges"]),
            )
        if kind == "partition":
            return PartitionMatroid(
                blocks=tuple(tuple(int(e) for e in b) for b in obj["blocks"]),
                capacities=tuple(int(c) for c in obj["capacities"]),
            )
        if kind == "uniform":
            size = obj.get("size", ground_size)
            if size is None:
                raise InputError("uniform matroid needs a ground-set size")
            return UniformMatroid(size=int(size), k=int(obj["k"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed matroid object: {exc}") from exc
    raise InputError(f"unknown matroid kind {obj.get('kind')!r}")


def to_json(instance: Instance) -> str:
    doc = {
        "matroid": matroid_to_obj(instance.matroid),
        "weights": list(instance.weights),
        "ordinal": [list(cats) for cats in instance.ordinals],
        "num_categories": list(instance.num_categories),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def from_json(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    try:
        matroid = matroid_from_obj(doc["matroid"], ground_size=len(doc["weights"]))
        return make_instance(matroid, doc["weights"], doc["ordinal"], doc["num_categories"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed instance document: {exc}") from exc


def load(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def save(instance: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(instance))
