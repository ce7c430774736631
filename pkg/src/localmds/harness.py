"""Experiment harness: run algorithms over generated graphs, report ratios.

A suite is a JSON-able dict:

    {
      "oracle_max_n": 25,            # exact optimum only up to this size
      "graphs": [{"family": "grid", "params": {"rows": 3, "cols": 4}, "seed": 0}, ...],
      "algorithms": [{"alg": "A"},
                     {"alg": "B", "control_fn": "linear:1", "k": 4,
                      "alpha": 302, "dim": 2}]
    }

Each (graph, algorithm) cell yields one RunReport row; cell failures are
recorded in the row and never abort the suite. CSV output excludes wall
clocks so identical seeds give byte-identical files; full reports,
including wall clocks, serialize to JSON.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass
from typing import Iterable

from .composition import BConfig, algorithm_b, parse_control, planar_nomination
from .domination import DEFAULT_BUDGET, mds_size, verify_domination
from .errors import EnumerationBudgetError, InputError, InvariantError, LocalMdsError, RuleError
from .generators import GeneratorSpec, generate
from .graph import LabeledGraph, neighborhood
from .nomination import algorithm_a_run
from .planarity import PLANAR

_CSV_COLUMNS = (
    "family",
    "params",
    "seed",
    "n",
    "m",
    "alg",
    "config",
    "status",
    "output_size",
    "optimum",
    "lower_bound",
    "ratio",
    "ratio_upper_bound",
    "error_count",
    "delta",
    "rounds_total",
)


@dataclass
class RunReport:
    """One algorithm run on one graph, with everything needed to re-verify it."""

    graph: dict
    algorithm: str
    config: dict
    status: str = "ok"
    message: str = ""
    output: tuple[int, ...] | None = None
    output_size: int | None = None
    optimum: int | None = None
    lower_bound: int | None = None
    ratio: float | None = None
    ratio_upper_bound: float | None = None
    errors: dict | None = None
    ledger: dict | None = None
    wall_clock_sec: float | None = None

    def to_json(self) -> str:
        payload = {"schema": "localmds.run_report@1", **asdict(self)}
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        payload = json.loads(text)
        if payload.pop("schema", None) != "localmds.run_report@1":
            raise InputError("not a localmds run report")
        payload["output"] = tuple(payload["output"]) if payload.get("output") is not None else None
        return cls(**payload)


def distance3_lower_bound(g: LabeledGraph) -> int:
    """Size of a greedy set of vertices pairwise at distance >= 3.

    Such vertices have disjoint closed neighborhoods, so any set dominating
    all of g needs at least one vertex per member: a true lower bound.
    """
    blocked: set[int] = set()
    count = 0
    for v in g.labels:
        if v in blocked:
            continue
        count += 1
        blocked |= neighborhood(g, (v,), 2)
    return count


def error_category(exc: BaseException) -> str:
    seen: BaseException | None = exc
    while seen is not None:
        if isinstance(seen, EnumerationBudgetError):
            return "resource"
        seen = seen.__cause__
    if isinstance(exc, InputError):
        return "input"
    if isinstance(exc, (InvariantError, RuleError)):
        return "internal"
    if isinstance(exc, LocalMdsError):
        return "error"
    return "unexpected"


def build_b_config(alg_config: dict) -> BConfig:
    control = parse_control(str(alg_config.get("control_fn", "linear:1")))
    k = int(alg_config.get("k", 4))
    alpha = int(alg_config.get("alpha", 302))
    dim = int(alg_config.get("dim", 2))
    return BConfig(sub=planar_nomination(k=k, alpha=alpha), predicate=PLANAR, control=control, dim=dim)


def run_cell(
    g: LabeledGraph,
    descriptor: dict,
    alg_config: dict,
    *,
    oracle_max_n: int = 25,
    budget: int = DEFAULT_BUDGET,
) -> RunReport:
    """Run one algorithm on one graph; failures land in the report row."""
    alg = str(alg_config.get("alg", ""))
    config = {k: v for k, v in alg_config.items() if k != "alg"}
    report = RunReport(graph=dict(descriptor, n=g.n, m=g.m), algorithm=alg, config=config)
    start = time.perf_counter()
    try:
        if alg == "A":
            run = algorithm_a_run(g)
            output, ledger = run.output, run.ledger
        elif alg == "B":
            cfg = build_b_config(config)
            result = algorithm_b(g, cfg, budget=budget)
            output, ledger = result.output, result.ledger
            report.errors = {
                "radius": result.errors.radius,
                "errors": sorted(result.errors.errors),
                "delta": result.errors.delta,
                "components": [
                    {"vertices": sorted(comp), "weak_diameter": wd}
                    for comp, wd in zip(result.errors.components, result.errors.weak_diameters)
                ],
            }
        else:
            raise InputError(f"unknown algorithm {alg!r} (expected 'A' or 'B')")
        if not verify_domination(g, output, g.labels):
            raise InvariantError("algorithm output does not dominate the graph")
        report.output = tuple(sorted(output))
        report.output_size = len(output)
        report.ledger = {
            "view_collection": ledger.view_collection,
            "algorithm_run": ledger.algorithm_run,
            "repair": ledger.repair,
            "total": ledger.total,
        }
        report.lower_bound = distance3_lower_bound(g)
        if g.n > 0 and g.n <= oracle_max_n:
            report.optimum = mds_size(g, g.labels, budget=budget)
            report.ratio = len(output) / report.optimum
        elif report.lower_bound:
            report.ratio_upper_bound = len(output) / report.lower_bound
    except Exception as exc:  # noqa: BLE001 - cell failures must not abort a suite
        report.status = error_category(exc)
        report.message = str(exc)
    report.wall_clock_sec = time.perf_counter() - start
    return report


def experiment(suite: dict) -> tuple[list[RunReport], dict]:
    """Run every (graph, algorithm) cell of a suite; return rows + aggregates."""
    if not isinstance(suite, dict) or "graphs" not in suite or "algorithms" not in suite:
        raise InputError("suite must be a dict with 'graphs' and 'algorithms'")
    oracle_max_n = int(suite.get("oracle_max_n", 25))
    budget = int(suite.get("budget", DEFAULT_BUDGET))
    reports: list[RunReport] = []
    for gspec in suite["graphs"]:
        spec = GeneratorSpec(
            family=str(gspec.get("family", "")),
            params=dict(gspec.get("params", {})),
            seed=int(gspec.get("seed", 0)),
        )
        descriptor = {"family": spec.family, "params": dict(spec.params), "seed": spec.seed}
        try:
            g = generate(spec)
        except Exception as exc:  # noqa: BLE001 - recorded per cell, suite continues
            for alg_config in suite["algorithms"]:
                reports.append(
                    RunReport(
                        graph=descriptor,
                        algorithm=str(alg_config.get("alg", "")),
                        config={k: v for k, v in alg_config.items() if k != "alg"},
                        status=error_category(exc),
                        message=str(exc),
                    )
                )
            continue
        for alg_config in suite["algorithms"]:
            reports.append(
                run_cell(g, descriptor, dict(alg_config), oracle_max_n=oracle_max_n, budget=budget)
            )
    return reports, aggregate(reports)


def aggregate(reports: Iterable[RunReport]) -> dict:
    """Per-algorithm aggregates: cell counts, failures, max/mean realized ratio."""
    out: dict[str, dict] = {}
    for r in reports:
        agg = out.setdefault(
            r.algorithm,
            {"cells": 0, "failures": 0, "max_ratio": None, "mean_ratio": None, "_ratios": []},
        )
        agg["cells"] += 1
        if r.status != "ok":
            agg["failures"] += 1
        if r.ratio is not None:
            agg["_ratios"].append(r.ratio)
    for agg in out.values():
        ratios = agg.pop("_ratios")
        if ratios:
            agg["max_ratio"] = max(ratios)
            agg["mean_ratio"] = sum(ratios) / len(ratios)
    return out


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def write_csv(reports: Iterable[RunReport], path) -> None:
    """Write report rows as CSV; byte-identical for identical suites."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                _csv_cell(r.graph.get("family")),
                _csv_cell(r.graph.get("params", {})),
                _csv_cell(r.graph.get("seed")),
                _csv_cell(r.graph.get("n")),
                _csv_cell(r.graph.get("m")),
                _csv_cell(r.algorithm),
                _csv_cell(r.config),
                _csv_cell(r.status),
                _csv_cell(r.output_size),
                _csv_cell(r.optimum),
                _csv_cell(r.lower_bound),
                _csv_cell(r.ratio),
                _csv_cell(r.ratio_upper_bound),
                _csv_cell(len(r.errors["errors"]) if r.errors else None),
                _csv_cell(r.errors["delta"] if r.errors else None),
                _csv_cell(r.ledger["total"] if r.ledger else None),
            ]
        )
    with open(path, "w", newline="") as fh:
        fh.write(buf.getvalue())
