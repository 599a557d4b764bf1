"""Compiled vs pure-Python kernel timings on table-sized workloads.

    python benchmarks/bench_kernels.py [--reps 2000]
"""

import argparse
import time

from buffercolour import _kernels
from buffercolour.graph import crown_graph, kneser_graph

WORKLOADS = [
    ("crown:20", lambda: crown_graph(20)),
    ("crown:100", lambda: crown_graph(100)),
    ("kneser:8,3", lambda: kneser_graph(8, 3)),
    ("kneser:10,4", lambda: kneser_graph(10, 4)),
]


def best_of(fn, repeat=3):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=2000)
    parser.add_argument("--python-reps", type=int, default=200, help="reps for the slow backend")
    args = parser.parse_args()
    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])

    print("| graph | b | backend | reps | seconds | runs/s | mean |")
    print("|---|---|---|---|---|---|---|")
    for name, build in WORKLOADS:
        g = build()
        _ = g.csr
        for b in (1, 2, 3):
            for backend in backends:
                reps = args.reps if backend == "cython" else args.python_reps
                secs, counts = best_of(
                    lambda: _kernels.trial_counts(g, None, b, 1, 0, reps, backend=backend),
                    repeat=3 if backend == "cython" else 1,
                )
                print(f"| {name} | {b} | {backend} | {reps} | {secs:.3f} | {reps / secs:,.0f} | {counts.mean():.3f} |")


if __name__ == "__main__":
    main()
