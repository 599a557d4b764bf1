"""Graphs, arrival orders and an exact chromatic-number oracle."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .rng import SplitMix64, shuffle


class GraphError(ValueError):
    """Invalid graph construction request."""


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, line: str, reason: str) -> None:
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno
        self.reason = reason


class GraphTooLargeError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Immutable once built.  ``labels`` carries optional display names, e.g.
    the k-subset behind each Kneser vertex.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = field(default=None, repr=False)
    name: str = ""

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length differs from vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        name: str = "",
    ) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(
            n,
            tuple(frozenset(s) for s in adj),
            tuple(labels) if labels is not None else None,
            name,
        )

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) int32 arrays with sorted neighbour lists."""
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        for v, nbrs in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(nbrs)
        indices = np.fromiter(
            (u for nbrs in self.adjacency for u in sorted(nbrs)),
            dtype=np.int32,
            count=int(indptr[-1]),
        )
        return indptr, indices

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def crown_graph(n: int) -> Graph:
    """Crown graph on 2n vertices: K_{n,n} minus a perfect matching.

    Index ``i-1`` is v_{1,i} and ``n+i-1`` is v_{2,i}.
    """
    if n < 1:
        raise GraphError(f"crown graph needs n >= 1, got {n}")
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    labels = [f"v1,{i}" for i in range(1, n + 1)] + [f"v2,{i}" for i in range(1, n + 1)]
    return Graph.from_edges(2 * n, edges, labels, name=f"crown:{n}")


def kneser_graph(n: int, k: int) -> Graph:
    """Kneser graph K(n, k); vertices are k-subsets of 1..n in lexicographic order."""
    if n < 1 or k < 1:
        raise GraphError(f"kneser graph needs n, k >= 1, got ({n}, {k})")
    if k > n:
        raise GraphError(f"kneser graph needs k <= n, got ({n}, {k})")
    subsets = list(combinations(range(1, n + 1), k))
    masks = [sum(1 << x for x in s) for s in subsets]
    edges = [
        (a, b)
        for a in range(len(masks))
        for b in range(a + 1, len(masks))
        if not masks[a] & masks[b]
    ]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return Graph.from_edges(len(subsets), edges, labels, name=f"kneser:{n},{k}")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), name=f"complete:{n}")


def graph_from_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    First meaningful line is the vertex count, every later non-empty line is
    a pair of 0-based indices.  Lines starting with ``#`` are skipped and
    duplicate edges collapse.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if n is None:
            if len(parts) != 1:
                raise EdgeListParseError(lineno, line, "expected vertex count")
            try:
                n = int(parts[0])
            except ValueError:
                raise EdgeListParseError(lineno, line, "vertex count is not an integer") from None
            if n < 0:
                raise EdgeListParseError(lineno, line, "negative vertex count")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(lineno, line, "expected two vertex indices")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, line, "vertex index is not an integer") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(lineno, line, f"vertex index out of range [0, {n})")
        if u == v:
            raise EdgeListParseError(lineno, line, "self-loop")
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise EdgeListParseError(0, "", "missing vertex count")
    return Graph.from_edges(n, sorted(edges))


def check_order(order: Sequence[int], n: int) -> list[int]:
    seq = [int(v) for v in order]
    if sorted(seq) != list(range(n)):
        raise GraphError(f"arrival order is not a permutation of 0..{n - 1}")
    return seq


def linear_order(n: int) -> list[int]:
    """(v_{1,1}, ..., v_{1,n}, v_{2,1}, ..., v_{2,n}) for crown_graph(n)."""
    if n < 1:
        raise GraphError("linear order needs n >= 1")
    return list(range(2 * n))


def alternate_order(n: int) -> list[int]:
    """(v_{1,1}, v_{2,1}, v_{1,2}, v_{2,2}, ...) for crown_graph(n)."""
    if n < 1:
        raise GraphError("alternate order needs n >= 1")
    order = []
    for i in range(n):
        order += [i, n + i]
    return order


def random_order(graph: Graph | int, seed: int | SplitMix64) -> list[int]:
    """Uniform permutation by Fisher-Yates; fixed seed gives a fixed order."""
    n = graph if isinstance(graph, int) else graph.n
    rand = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
    return shuffle(list(range(n)), rand)


def from_one_based(order: Iterable[int]) -> list[int]:
    return [int(v) - 1 for v in order]


# exact chromatic number


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    best: list[int] = []
    for start in sorted(range(len(adj)), key=lambda v: -len(adj[v]))[:32]:
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda u: len(adj[u] & cand))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(adj: list[set[int]]) -> int:
    n = len(adj)
    colour = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max(
            (u for u in range(n) if not colour[u]),
            key=lambda u: (len(sat[u]), len(adj[u])),
        )
        c = 1
        while c in sat[v]:
            c += 1
        colour[v] = c
        used = max(used, c)
        for u in adj[v]:
            sat[u].add(c)
    return used


def _k_colourable(adj: list[set[int]], k: int, clique: list[int]) -> bool:
    """DSATUR backtracking decision procedure with forward checking."""
    n = len(adj)
    nbrs = [list(a) for a in adj]
    colour = [0] * n
    # counts[v][c]: coloured neighbours of v holding colour c
    counts = [[0] * (k + 1) for _ in range(n)]
    satn = [0] * n

    def assign(v: int, c: int) -> bool:
        colour[v] = c
        ok = True
        for u in nbrs[v]:
            cu = counts[u]
            if cu[c] == 0:
                satn[u] += 1
                if satn[u] == k and not colour[u]:
                    ok = False
            cu[c] += 1
        return ok

    def unassign(v: int, c: int) -> None:
        colour[v] = 0
        for u in nbrs[v]:
            cu = counts[u]
            cu[c] -= 1
            if cu[c] == 0:
                satn[u] -= 1

    for i, v in enumerate(clique):
        if i >= k or not assign(v, i + 1):
            return False
    used = min(len(clique), k)
    remaining = n - min(len(clique), k)

    def search(used: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        best, best_key = -1, (-1, -1)
        for u in range(n):
            if not colour[u]:
                key = (satn[u], len(nbrs[u]))
                if key > best_key:
                    best, best_key = u, key
        v = best
        cv = counts[v]
        for c in range(1, min(used + 1, k) + 1):
            if cv[c]:
                continue
            ok = assign(v, c)
            if ok and search(max(used, c), remaining - 1):
                return True
            unassign(v, c)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 200))
    try:
        return search(used, remaining)
    finally:
        sys.setrecursionlimit(limit)


def _k_colourable_sat(adj: list[set[int]], k: int, clique: list[int]) -> bool:
    """SAT decision: one literal per (vertex, colour).

    Clique vertices get colours 0..q-1 outright.  The remaining colours obey
    value precedence over the non-clique vertices in index order: colour
    c > q appears only after colour c-1 has appeared.
    """
    from pysat.solvers import Solver

    n = len(adj)
    if len(clique) > k:
        return False

    def lit(v: int, c: int) -> int:
        return v * k + c + 1

    top = n * k
    with Solver(name="cd19") as solver:
        for v in range(n):
            solver.add_clause([lit(v, c) for c in range(k)])
        for v in range(n):
            for u in adj[v]:
                if v < u:
                    for c in range(k):
                        solver.add_clause([-lit(v, c), -lit(u, c)])
        for c, v in enumerate(clique):
            solver.add_clause([lit(v, c)])
        in_clique = set(clique)
        others = [v for v in range(n) if v not in in_clique]
        for c in range(len(clique) + 1, k):
            seen_prev = None  # literal: colour c-1 used among vertices so far
            for v in others:
                if seen_prev is None:
                    solver.add_clause([-lit(v, c)])
                else:
                    solver.add_clause([-lit(v, c), seen_prev])
                top += 1
                seen = top
                solver.add_clause([-lit(v, c - 1), seen])
                if seen_prev is None:
                    solver.add_clause([-seen, lit(v, c - 1)])
                else:
                    solver.add_clause([-seen_prev, seen])
                    solver.add_clause([-seen, seen_prev, lit(v, c - 1)])
                seen_prev = seen
        return solver.solve()


def _sat_available() -> bool:
    try:
        import pysat.solvers  # noqa: F401
    except ImportError:
        return False
    return True


def chromatic_number_exact(graph: Graph, vertex_limit: int = 16, engine: str = "auto") -> int:
    """Exact chromatic number.

    A greedy clique bounds from below and DSATUR from above; k-colourability
    is then decided for k = upper-1, upper-2, ... until the first failure.
    ``engine`` picks the decision procedure: ``"sat"`` (python-sat),
    ``"dsatur"`` (pure backtracking) or ``"auto"`` (sat when importable).
    Graphs above ``vertex_limit`` vertices are refused.
    """
    if graph.n > vertex_limit:
        raise GraphTooLargeError(
            f"graph has {graph.n} vertices > vertex_limit={vertex_limit}; "
            "exact search is exponential, use an analytical formula "
            "(e.g. kneser_chromatic) or raise vertex_limit"
        )
    if engine == "auto":
        engine = "sat" if _sat_available() else "dsatur"
    if engine not in ("sat", "dsatur"):
        raise ValueError(f"unknown engine {engine!r}")
    if graph.n == 0:
        return 0
    if graph.edge_count == 0:
        return 1
    adj = [set(a) for a in graph.adjacency]
    clique = _greedy_clique(adj)
    decide = _k_colourable_sat if engine == "sat" else _k_colourable
    best = _dsatur_greedy(adj)
    for k in range(best - 1, len(clique) - 1, -1):
        if not decide(adj, k, clique):
            break
        best = k
    return best
