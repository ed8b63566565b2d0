"""Benchmark harness: run heuristics over instance sets, compare against
known optima or computed lower bounds, render CSV/markdown reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .baselines import clarke_wright, greedy_edge, nearest_neighbor
from .bounds import EXACT_MAX_N, exact_optimum, held_karp_bound
from .construction import ExponentCombo, default_grid, grid_search
from .errors import ConfigError, TourcraftError
from .instance import (DistanceMatrix, Instance, build_distance_matrix,
                       city_stats, generate_random_euclidean, validate_tour)
from .tsplib import OptimaTable, default_optima, parse_tsplib

METHODS = ("proposed", "nn", "greedy", "cw")

CSV_HEADER = ("instance,n,method,alpha,beta,gamma,delta,epsilon,"
              "length,reference,reference_kind,pct_error,wall_millis")


def percent_error(length: float, reference: float) -> float:
    """100 * (length - reference) / reference."""
    if reference <= 0:
        raise ConfigError(f"reference must be positive, got {reference}")
    return 100.0 * (length - reference) / reference


@dataclass
class BenchRecord:
    instance_name: str
    n: int
    method: str
    combo: Optional[ExponentCombo]
    tour_length: float
    reference: float
    reference_kind: str  # known-optimum | hk-bound | exact
    pct_error: float
    wall_millis: float


@dataclass
class RunConfig:
    """What to run: instance sources, methods, grid, reference policy, output."""

    files: List[Path] = field(default_factory=list)
    instances: List[Instance] = field(default_factory=list)
    random_n: Optional[int] = None
    random_count: int = 0
    random_seeds: Optional[List[int]] = None
    random_box: float = 1_000_000.0
    methods: Tuple[str, ...] = ("proposed",)
    grid: Optional[List[ExponentCombo]] = None
    optima: Optional[OptimaTable] = None
    bound_iters: int = 1000
    output_format: str = "csv"

    def validate(self) -> None:
        if not self.files and not self.instances and not self.random_count:
            raise ConfigError("no instance source configured")
        for m in self.methods:
            if m not in METHODS:
                raise ConfigError(f"unknown method {m!r}; known: {METHODS}")
        if not self.methods:
            raise ConfigError("no methods configured")
        if self.output_format not in ("csv", "md"):
            raise ConfigError(f"unknown output format {self.output_format!r}")


def _gather_instances(config: RunConfig) -> List[Instance]:
    instances = list(config.instances)
    for path in config.files:
        p = Path(path)
        try:
            text = p.read_text()
        except OSError as exc:
            raise TourcraftError(f"cannot read instance file {p}: {exc}")
        instances.append(parse_tsplib(text))
    if config.random_count:
        if config.random_n is None:
            raise ConfigError("random_count set without random_n")
        seeds = config.random_seeds or list(range(1, config.random_count + 1))
        if len(seeds) != config.random_count:
            raise ConfigError("seed list length must match random_count")
        for seed in seeds:
            instances.append(generate_random_euclidean(
                config.random_n, seed, config.random_box))
    return instances


def _solve(method: str, matrix: DistanceMatrix, stats,
           grid) -> Tuple[float, Optional[ExponentCombo], Sequence[int]]:
    if method == "proposed":
        result = grid_search(matrix, stats, grid)
        return result.tour.length, result.combo, result.tour.order
    if method == "nn":
        t = nearest_neighbor(matrix)
    elif method == "greedy":
        t = greedy_edge(matrix)
    elif method == "cw":
        t = clarke_wright(matrix, stats=stats)
    else:
        raise ConfigError(f"unknown method {method!r}")
    return t.length, None, t.order


def _reference(instance: Instance, matrix: DistanceMatrix,
               optima: OptimaTable, bound_iters: int,
               upper_hint: float) -> Tuple[float, str]:
    known = optima.lookup(instance.name)
    if known is not None:
        return float(known), "known-optimum"
    if instance.n <= 12:
        return exact_optimum(matrix).length, "exact"
    lb = held_karp_bound(matrix, max_iters=bound_iters,
                         upper_bound_hint=upper_hint)
    return lb.bound, "hk-bound"


def run_benchmark(config: RunConfig) -> List[BenchRecord]:
    """One record per (instance, method), sorted by (instance, method)."""
    config.validate()
    optima = config.optima if config.optima is not None else default_optima()
    grid = config.grid if config.grid is not None else default_grid()
    records: List[BenchRecord] = []
    for instance in _gather_instances(config):
        matrix = build_distance_matrix(instance)
        stats = city_stats(matrix)
        reference: Optional[Tuple[float, str]] = None
        for method in config.methods:
            t0 = time.perf_counter()
            length, combo, order = _solve(method, matrix, stats, grid)
            millis = (time.perf_counter() - t0) * 1000.0
            report = validate_tour(order, instance.n)
            assert report.ok, f"{method} produced an invalid tour: {report}"
            if reference is None:
                reference = _reference(instance, matrix, optima,
                                       config.bound_iters, length)
            ref_value, ref_kind = reference
            records.append(BenchRecord(
                instance_name=instance.name, n=instance.n, method=method,
                combo=combo, tour_length=length, reference=ref_value,
                reference_kind=ref_kind,
                pct_error=percent_error(length, ref_value),
                wall_millis=millis))
    records.sort(key=lambda r: (r.instance_name, r.method))
    return records


def _combo_cells(combo: Optional[ExponentCombo]) -> List[str]:
    if combo is None:
        return [""] * 5
    return [f"{v:g}" for v in combo.as_tuple()]


def _record_cells(r: BenchRecord) -> List[str]:
    return ([r.instance_name, str(r.n), r.method] + _combo_cells(r.combo) +
            [f"{r.tour_length:.2f}", f"{r.reference:.2f}", r.reference_kind,
             f"{r.pct_error:.2f}", f"{r.wall_millis:.3f}"])


def _mean_rows(records: Sequence[BenchRecord]) -> List[List[str]]:
    rows = []
    for method in sorted({r.method for r in records}):
        errs = [r.pct_error for r in records if r.method == method]
        rows.append(["mean", str(len(errs)), method] + [""] * 5 +
                    ["", "", "", f"{sum(errs) / len(errs):.2f}", ""])
    return rows


def render_report(records: Sequence[BenchRecord], fmt: str = "csv") -> str:
    """CSV or aligned-markdown table with per-method mean-error footer rows."""
    if not records:
        raise ConfigError("no records to render")
    rows = [_record_cells(r) for r in records] + _mean_rows(records)
    header = CSV_HEADER.split(",")
    if fmt == "csv":
        return "\n".join([",".join(header)] +
                         [",".join(row) for row in rows]) + "\n"
    if fmt == "md":
        widths = [max(len(h), *(len(row[i]) for row in rows))
                  for i, h in enumerate(header)]
        def line(cells):
            return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
        sep = "| " + " | ".join("-" * w for w in widths) + " |"
        return "\n".join([line(header), sep] + [line(r) for r in rows]) + "\n"
    raise ConfigError(f"unknown report format {fmt!r}")
