"""Command line interface.

Verbs: ``generate`` writes an instance JSON file, ``solve`` prints the
non-dominated set of one instance as CSV, ``bench`` runs a benchmark sweep,
``verify`` cross-checks the solvers against the brute-force oracle.

Exit codes: 0 success, 2 input error, 3 resource cap exceeded,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import instance as instance_io
from .errors import InputError, ResourceLimitError
from .experiment import (
    ALGORITHMS,
    ExperimentConfig,
    generate_instance,
    run_algorithm,
    run_experiment,
    verify_against_oracle,
)
from .orders import OutcomePoint

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("graphic", "partition"), required=True)
    p.add_argument("--n", type=int, required=True, help="nodes (graphic) or elements (partition)")
    p.add_argument("--m", type=int, default=None, help="edge count, graphic family only")
    p.add_argument("--K", type=int, default=3, dest="K", help="categories per ordinal objective")
    p.add_argument("--p", type=int, default=1, dest="p", help="number of ordinal objectives")
    p.add_argument("--seed", type=int, default=0, help="64-bit base seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordmatroid",
        description="Matroid optimization with a sum objective and ordinal objectives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate a random instance JSON file")
    _add_family_args(p_gen)
    p_gen.add_argument("--out", default=None, help="output path, stdout when omitted")

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("instance", help="path of an instance JSON file")
    p_solve.add_argument("--algo", default="mioc", choices=ALGORITHMS)
    p_solve.add_argument("--out", default=None, help="output path, stdout when omitted")

    p_bench = sub.add_parser("bench", help="run a benchmark sweep and emit CSV")
    _add_family_args(p_bench)
    p_bench.add_argument("--instances", type=int, default=1)
    p_bench.add_argument("--algo", default="mioc", help="comma-separated algorithm list")
    p_bench.add_argument("--out", default=None, help="output path, stdout when omitted")

    p_verify = sub.add_parser("verify", help="cross-check solvers against the oracle")
    _add_family_args(p_verify)
    p_verify.add_argument("--instances", type=int, default=10)
    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _points_csv(points: list[OutcomePoint], objectives: int, iters: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    header = ["weight"] + [f"ordinal_{i + 1}" for i in range(objectives)] + ["witness", "iters"]
    writer.writerow(header)
    for p in points:
        row = [p.weight]
        row.extend(" ".join(str(c) for c in ov) for ov in p.ordinals)
        row.append(" ".join(str(e) for e in p.witness))
        row.append(iters)
        writer.writerow(row)
    return buf.getvalue()


def _config_from_args(args: argparse.Namespace, algorithms: tuple[str, ...]) -> ExperimentConfig:
    return ExperimentConfig(
        family=args.family,
        n=args.n,
        m=args.m,
        num_categories=args.K,
        objectives=args.p,
        instances=getattr(args, "instances", 1),
        seed=args.seed,
        algorithms=algorithms,
    )


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args, ("mioc",))
    inst = generate_instance(cfg, cfg.seed)
    _write(instance_io.to_json(inst), args.out)
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = instance_io.load(args.instance)
    points, iters = run_algorithm(inst, args.algo)
    points = sorted(points, key=lambda p: (p.weight, p.ordinals))
    _write(_points_csv(points, inst.objective_count, iters), args.out)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    algorithms = tuple(a.strip() for a in args.algo.split(",") if a.strip())
    cfg = _config_from_args(args, algorithms)
    report = run_experiment(cfg)
    _write(report.csv_text, args.out)
    return EXIT_RESOURCE if report.failures else EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config_from_args(args, ("mioc",))
    report = verify_against_oracle(cfg)
    checked = len(report.rows)
    if report.mismatches:
        print(f"verify: {report.mismatches} of {checked} solver runs disagree with the oracle")
        for row in report.rows:
            if not row["ok"]:
                print(f"  seed={row['seed']} algo={row['algo']}")
        return EXIT_MISMATCH
    print(f"verify: {checked} solver runs match the oracle")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": _cmd_generate,
        "solve": _cmd_solve,
        "bench": _cmd_bench,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
