"""Seeded Monte Carlo harness for the crown and Kneser mean-colour tables."""

from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .graph import (
    Graph,
    GraphError,
    alternate_order,
    check_order,
    crown_graph,
    graph_from_edge_list,
    kneser_graph,
    linear_order,
)

DEFAULT_REPS = 20_000

CROWN_N = (4, 6, 10, 20, 50, 100)
KNESER_NK = (
    (5, 2), (6, 2), (7, 2), (8, 2), (9, 2), (10, 2),
    (7, 3), (8, 3), (9, 3), (10, 3),
    (9, 4), (10, 4),
)  # fmt: skip

# published mean colour counts, keyed by (n, b) and (n, k, b)
PUBLISHED_CROWN_MEANS = {
    (4, 2): 2.24, (4, 1): 2.32,
    (6, 2): 2.15, (6, 1): 2.20,
    (10, 2): 2.08, (10, 1): 2.12,
    (20, 2): 2.04, (20, 1): 2.05,
    (50, 2): 2.02, (50, 1): 2.02,
    (100, 2): 2.01, (100, 1): 2.01,
}  # fmt: skip
PUBLISHED_KNESER_MEANS = {
    (5, 2, 1): 3.13, (5, 2, 2): 3.10,
    (6, 2, 1): 4.28, (6, 2, 2): 4.23,
    (7, 2, 1): 5.44, (7, 2, 2): 5.37,
    (8, 2, 1): 6.58, (8, 2, 2): 6.51,
    (9, 2, 1): 7.70, (9, 2, 2): 7.64,
    (10, 2, 1): 8.81, (10, 2, 2): 8.74,
    (7, 3, 1): 3.93, (7, 3, 2): 3.92,
    (8, 3, 1): 5.69, (8, 3, 2): 5.65,
    (9, 3, 1): 7.35, (9, 3, 2): 7.30,
    (10, 3, 1): 8.93, (10, 3, 2): 8.88,
    (9, 4, 1): 4.89, (9, 4, 2): 4.88,
    (10, 4, 1): 7.52, (10, 4, 2): 7.49,
}  # fmt: skip


@dataclass(frozen=True)
class GraphSpec:
    kind: str  # "crown" | "kneser" | "file"
    n: int = 0
    k: int = 0
    path: str = ""

    @classmethod
    def parse(cls, text: str) -> GraphSpec:
        kind, sep, arg = text.partition(":")
        if not sep:
            raise GraphError(f"graph spec {text!r} must look like crown:N, kneser:N,K or file:PATH")
        try:
            if kind == "crown":
                return cls("crown", n=int(arg))
            if kind == "kneser":
                n, k = (int(x) for x in arg.split(","))
                return cls("kneser", n=n, k=k)
        except ValueError:
            raise GraphError(f"bad numbers in graph spec {text!r}") from None
        if kind == "file" and arg:
            return cls("file", path=arg)
        raise GraphError(f"unknown graph spec {text!r}")

    def build(self) -> Graph:
        if self.kind == "crown":
            return crown_graph(self.n)
        if self.kind == "kneser":
            return kneser_graph(self.n, self.k)
        return graph_from_edge_list(Path(self.path).read_text(encoding="utf-8"))

    def __str__(self) -> str:
        if self.kind == "crown":
            return f"crown:{self.n}"
        if self.kind == "kneser":
            return f"kneser:{self.n},{self.k}"
        return f"file:{self.path}"


def resolve_order(policy: str | Sequence[int], graph: Graph, spec: GraphSpec | None = None) -> list[int] | None:
    """Fixed 0-based order for ``policy``, or ``None`` for a fresh random order per run."""
    if not isinstance(policy, str):
        return check_order(policy, graph.n)
    if policy == "random":
        return None
    if policy in ("linear", "alternate"):
        if spec is None or spec.kind != "crown":
            raise GraphError(f"{policy} order is defined for crown graphs only")
        return linear_order(spec.n) if policy == "linear" else alternate_order(spec.n)
    raise GraphError(f"unknown order policy {policy!r}")


@dataclass(frozen=True)
class TrialConfig:
    graph: GraphSpec
    order: str | tuple[int, ...] = "random"
    b: int = 1
    repetitions: int = DEFAULT_REPS
    master_seed: int = 1

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.b < 1:
            raise ValueError("buffer size must be >= 1")


@dataclass(frozen=True)
class SimulationReport:
    mean: float
    std_error: float
    min: int
    max: int
    repetitions: int
    master_seed: int
    b: int
    graph: str
    empirical_pmf: dict[int, int] = field(default_factory=dict)

    def frequencies(self) -> dict[int, float]:
        return {k: c / self.repetitions for k, c in self.empirical_pmf.items()}


def _chunk(args):
    graph, order, b, seed, start, stop = args
    return _kernels.trial_counts(graph, order, b, seed, start, stop)


def trial_counts(config: TrialConfig, workers: int = 1) -> np.ndarray:
    """Per-repetition colour counts, in repetition order."""
    graph = config.graph.build()
    order = resolve_order(config.order, graph, config.graph)
    reps = config.repetitions
    if workers <= 1 or reps < 2 * workers:
        return _kernels.trial_counts(graph, order, config.b, config.master_seed, 0, reps)
    bounds = np.linspace(0, reps, workers + 1, dtype=np.int64)
    jobs = [
        (graph, order, config.b, config.master_seed, int(lo), int(hi))
        for lo, hi in zip(bounds[:-1], bounds[1:])
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return np.concatenate(list(pool.map(_chunk, jobs)))


def run_trials(config: TrialConfig, workers: int = 1) -> SimulationReport:
    """Run ``config.repetitions`` independent colourings and summarize them.

    Repetition i seeds its arrival order and its tie-breaks from
    ``(master_seed, i)`` alone, so the report does not depend on ``workers``.
    """
    counts = trial_counts(config, workers)
    reps = len(counts)
    std = float(np.std(counts, ddof=1)) if reps > 1 else 0.0
    return SimulationReport(
        mean=float(np.mean(counts)),
        std_error=std / math.sqrt(reps),
        min=int(counts.min()),
        max=int(counts.max()),
        repetitions=reps,
        master_seed=config.master_seed,
        b=config.b,
        graph=str(config.graph),
        empirical_pmf=dict(sorted(Counter(int(c) for c in counts).items())),
    )


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int | None
    b: int
    mean: float
    stderr: float
    min: int
    max: int
    reps: int
    seed: int

    @property
    def published(self) -> float | None:
        if self.k is None:
            return PUBLISHED_CROWN_MEANS.get((self.n, self.b))
        return PUBLISHED_KNESER_MEANS.get((self.n, self.k, self.b))


def _row(report: SimulationReport, n: int, k: int | None) -> TableRow:
    return TableRow(
        n, k, report.b, report.mean, report.std_error, report.min, report.max,
        report.repetitions, report.master_seed,
    )  # fmt: skip


def crown_table(
    n_list: Iterable[int] = CROWN_N,
    b_list: Iterable[int] = (2, 1),
    reps: int = DEFAULT_REPS,
    seed: int = 1,
    workers: int = 1,
) -> list[TableRow]:
    rows = []
    b_values = list(b_list)
    for n in n_list:
        for b in b_values:
            cfg = TrialConfig(GraphSpec("crown", n=n), "random", b, reps, seed)
            rows.append(_row(run_trials(cfg, workers), n, None))
    return rows


def kneser_table(
    nk_list: Iterable[tuple[int, int]] = KNESER_NK,
    b_list: Iterable[int] = (1, 2),
    reps: int = DEFAULT_REPS,
    seed: int = 1,
    workers: int = 1,
) -> list[TableRow]:
    rows = []
    b_values = list(b_list)
    for n, k in nk_list:
        if k < 2:
            raise GraphError("kneser table cells need k >= 2")
        for b in b_values:
            cfg = TrialConfig(GraphSpec("kneser", n=n, k=k), "random", b, reps, seed)
            rows.append(_row(run_trials(cfg, workers), n, k))
    return rows


def _fields(rows: Sequence[TableRow]) -> list[str]:
    with_k = any(r.k is not None for r in rows)
    return ["n"] + (["k"] if with_k else []) + ["b", "mean", "stderr", "min", "max", "reps", "seed"]


def _record(row: TableRow, fields: Sequence[str]) -> dict:
    data = asdict(row)
    return {f: data[f] for f in fields}


def table_to_csv(rows: Sequence[TableRow]) -> str:
    fields = _fields(rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        rec = _record(row, fields)
        rec["mean"] = f"{row.mean:.4f}"
        rec["stderr"] = f"{row.stderr:.4f}"
        writer.writerow(rec)
    return buf.getvalue()


def table_to_json(rows: Sequence[TableRow]) -> str:
    fields = _fields(rows)
    return "".join(json.dumps(_record(r, fields)) + "\n" for r in rows)


@dataclass(frozen=True)
class DeltaScan:
    n: int
    k: int
    delta: float
    smallest_b: int | None
    means: dict[int, float]
    gaps: dict[int, float]


def delta_scan(
    n: int,
    k: int,
    b_max: int,
    delta: float,
    reps: int = DEFAULT_REPS,
    seed: int = 1,
    workers: int = 1,
) -> DeltaScan:
    """Smallest b in 2..b_max whose normalized gap to b=2 exceeds ``delta``.

    gap(b) = (E C(2) - E C(b)) / (n - 2k + 2), each mean estimated with the
    same master seed.
    """
    if n < 2 * k:
        raise GraphError(f"delta scan needs n >= 2k, got ({n}, {k})")
    if b_max < 2:
        raise ValueError("b_max must be >= 2")
    chi = n - 2 * k + 2
    means = {}
    for b in range(2, b_max + 1):
        cfg = TrialConfig(GraphSpec("kneser", n=n, k=k), "random", b, reps, seed)
        means[b] = run_trials(cfg, workers).mean
    gaps = {b: (means[2] - means[b]) / chi for b in means}
    smallest = next((b for b in sorted(gaps) if gaps[b] > delta), None)
    return DeltaScan(n, k, delta, smallest, means, gaps)
