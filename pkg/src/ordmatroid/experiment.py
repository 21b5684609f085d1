"""Benchmark driver: generate instances, run solvers, emit one CSV row each.

Rows are ordered by (seed, algorithm) and the CSV uses RFC 4180 conventions
with a mandatory header.  With a fixed configuration the output is byte
identical between runs except for the ``millis`` column, which reports
monotonic wall time and is never part of any assertion.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

from .errors import InputError, ResourceLimitError
from .generators import gen_graphic, gen_partition
from .greedy import greedy_ordinal_basis
from .instance import Instance
from .oracle import enumerate_bases, oracle_nd
from .orders import OutcomePoint
from .solvers import mioc, mioc_improved, mioc_lexmax, mioc_lexmin, mioc_multi

CSV_HEADER = ["family", "n", "m", "K", "p", "seed", "algo", "nd_count", "iters", "millis"]

ALGORITHMS = ("mioc", "mioc-o", "mioc-cmin", "mioc-cmax", "greedy", "oracle")


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    n: int
    m: int | None = None
    num_categories: int = 3
    objectives: int = 1
    instances: int = 1
    seed: int = 0
    algorithms: tuple[str, ...] = ("mioc",)

    def __post_init__(self):
        if self.family not in ("graphic", "partition"):
            raise InputError(f"unknown family {self.family!r}")
        if self.family == "graphic":
            if self.m is None:
                raise InputError("graphic instances need an edge count m")
            if self.m < self.n - 1:
                raise InputError("connected graphs need m >= n-1")
        if self.instances < 1:
            raise InputError("need at least one instance")
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise InputError(f"unknown algorithm {algo!r}")


@dataclass
class ExperimentReport:
    csv_text: str
    failures: int = 0
    mismatches: int = 0
    rows: list[dict] = field(default_factory=list)


def generate_instance(cfg: ExperimentConfig, seed: int) -> Instance:
    if cfg.family == "graphic":
        assert cfg.m is not None
        return gen_graphic(cfg.n, cfg.m, cfg.num_categories, seed, cfg.objectives)
    return gen_partition(cfg.n, cfg.num_categories, seed, cfg.objectives)


def run_algorithm(instance: Instance, algo: str) -> tuple[list[OutcomePoint], int]:
    """Run one solver; returns (points, subproblem count)."""
    multi = instance.objective_count > 1
    if algo == "mioc":
        result = mioc_multi(instance) if multi else mioc(instance)
        return list(result), result.iterations
    if multi:
        raise InputError(f"algorithm {algo!r} handles a single ordinal objective")
    if algo == "mioc-o":
        result = mioc_improved(instance)
        return list(result), result.iterations
    if algo == "mioc-cmin":
        result = mioc_lexmin(instance)
        return list(result), result.iterations
    if algo == "mioc-cmax":
        result = mioc_lexmax(instance)
        return list(result), result.iterations
    if algo == "greedy":
        return [greedy_ordinal_basis(instance)], 1
    if algo == "oracle":
        bases = enumerate_bases(instance.matroid)
        return list(oracle_nd(instance, "ordinal")), len(bases)
    raise InputError(f"unknown algorithm {algo!r}")


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    rows = []
    failures = 0
    for i in range(cfg.instances):
        seed = cfg.seed + i
        instance = generate_instance(cfg, seed)
        for algo in sorted(cfg.algorithms):
            row = {
                "family": cfg.family,
                "n": cfg.n,
                "m": instance.size,
                "K": cfg.num_categories,
                "p": cfg.objectives,
                "seed": seed,
                "algo": algo,
            }
            start = time.monotonic()
            try:
                points, iters = run_algorithm(instance, algo)
            except ResourceLimitError:
                failures += 1
                row.update({"nd_count": "", "iters": "", "millis": ""})
            else:
                elapsed = (time.monotonic() - start) * 1000.0
                row.update(
                    {"nd_count": len(points), "iters": iters, "millis": f"{elapsed:.3f}"}
                )
            rows.append(row)
    rows.sort(key=lambda r: (r["seed"], r["algo"]))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER)
    writer.writeheader()
    writer.writerows(rows)
    return ExperimentReport(csv_text=buf.getvalue(), failures=failures, rows=rows)


def _outcome_keys(points: list[OutcomePoint]) -> set[tuple]:
    return {p.key() for p in points}


def verify_against_oracle(cfg: ExperimentConfig) -> ExperimentReport:
    """Solver-versus-oracle sweep; counts outcome-set mismatches."""
    mismatches = 0
    rows = []
    for i in range(cfg.instances):
        seed = cfg.seed + i
        instance = generate_instance(cfg, seed)
        if instance.objective_count > 1:
            expected = {"mioc": _outcome_keys(oracle_nd(instance, "ordinal"))}
            candidates = {"mioc": mioc_multi(instance)}
        else:
            expected = {
                "mioc": _outcome_keys(oracle_nd(instance, "ordinal")),
                "mioc-o": _outcome_keys(oracle_nd(instance, "ordinal")),
                "mioc-cmin": _outcome_keys(oracle_nd(instance, "lexmin")),
                "mioc-cmax": _outcome_keys(oracle_nd(instance, "lexmax")),
            }
            candidates = {
                "mioc": mioc(instance),
                "mioc-o": mioc_improved(instance),
                "mioc-cmin": mioc_lexmin(instance),
                "mioc-cmax": mioc_lexmax(instance),
            }
        for algo, points in candidates.items():
            ok = _outcome_keys(list(points)) == expected[algo]
            if not ok:
                mismatches += 1
            rows.append({"seed": seed, "algo": algo, "ok": ok})
    return ExperimentReport(csv_text="", mismatches=mismatches, rows=rows)
