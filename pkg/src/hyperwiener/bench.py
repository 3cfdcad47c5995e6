"""Timing harness comparing brute-force and cut-based Wiener computations."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import astuple, dataclass
from typing import Callable, Iterable

from . import generators
from .hypergraph import Hypergraph
from .metric import wiener_brute
from .wiener import CutPartition, wiener_cut, wiener_general, wiener_hypertree

CSV_COLUMNS = ("family", "params", "n_vertices", "n_edges", "method", "wiener", "nanos")

DEFAULT_GRIDS = {
    "cube": [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)],
    "phenylene": [8, 16, 32],
    "hypertree": [(3, 10), (3, 20)],
}


class MethodDisagreement(RuntimeError):
    def __init__(self, message: str, instance: str):
        super().__init__(message)
        self.instance = instance


@dataclass
class BenchRecord:
    family: str
    params: str
    n_vertices: int
    n_edges: int
    method: str
    wiener: int
    nanos: int


def _timed(fn: Callable[[], int], repeats: int) -> tuple[int, int]:
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        value = fn()
        elapsed = time.perf_counter_ns() - t0
        best = elapsed if best is None else min(best, elapsed)
    return value, best


def _instances(family: str, params) -> tuple[str, Hypergraph, dict[str, Callable[[], int]]]:
    if family == "cube":
        k, n = params
        H, _ = generators.cube(k, n)
        label = f"k={k};n={n}"
        methods = {"cut": lambda: wiener_cut(H).total}
    elif family == "phenylene":
        H = generators.phenylene(params)
        C = CutPartition.singletons(H)
        label = f"n={params}"
        methods = {"general": lambda: wiener_general(H, C, prevalidated=True).total}
    elif family == "hypertree":
        k, m = params
        H = generators.random_hypertree([k] * m, seed=0)
        label = f"k={k};edges={m};seed=0"
        methods = {"cut": lambda: wiener_cut(H).total,
                   "tree": lambda: wiener_hypertree(H).total}
    else:
        raise ValueError(f"unknown family {family!r}")
    return label, H, {"brute": lambda: wiener_brute(H), **methods}


def parse_family(token: str) -> tuple[str, list]:
    """``name`` or ``name:p1,p2,...``; cube and hypertree params are ``AxB``."""
    name, _, spec = token.partition(":")
    if name not in DEFAULT_GRIDS:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(DEFAULT_GRIDS)}")
    if not spec:
        return name, list(DEFAULT_GRIDS[name])
    params = []
    for item in spec.split(","):
        if name == "phenylene":
            params.append(int(item))
        else:
            a, b = item.lower().split("x")
            params.append((int(a), int(b)))
    return name, params


def run_bench(families: Iterable[tuple[str, list]], repeats: int = 3) -> list[BenchRecord]:
    """One record per (instance, method); values must agree within an instance."""
    from .io import write_hypergraph

    records = []
    for family, grid in families:
        for params in grid:
            label, H, methods = _instances(family, params)
            group = []
            for method, fn in methods.items():
                value, nanos = _timed(fn, repeats)
                group.append(BenchRecord(family, label, H.vertex_count, H.edge_count,
                                         method, value, nanos))
            values = {r.method: r.wiener for r in group}
            if len(set(values.values())) != 1:
                raise MethodDisagreement(
                    f"{family} {label}: methods disagree {values}", write_hypergraph(H))
            records.extend(group)
    return records


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(astuple(r))
    return buf.getvalue()
