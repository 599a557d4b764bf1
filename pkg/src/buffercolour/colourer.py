"""First Fit, lookahead-buffer colouring and exact outcome enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Protocol, Sequence

from . import _kernels, _pycore
from .graph import Graph, GraphError, GraphTooLargeError, check_order
from .rng import SplitMix64


class RandomSource(Protocol):
    def uniform_below(self, r: int) -> int: ...


class ContractViolation(ValueError):
    pass


class BranchCapExceeded(RuntimeError):
    def __init__(self, explored: int, cap: int) -> None:
        super().__init__(f"branch cap {cap} exceeded after exploring {explored} branches")
        self.explored = explored
        self.cap = cap


@dataclass(frozen=True)
class Colouring:
    colours: dict[int, int]

    @property
    def count(self) -> int:
        return len(set(self.colours.values()))

    def as_list(self) -> list[int]:
        return [self.colours[v] for v in range(len(self.colours))]

    def is_proper(self, graph: Graph) -> bool:
        return all(
            self.colours[u] != self.colours[v] for u, v in graph.edges()
        ) and len(self.colours) == graph.n


@dataclass
class BufferState:
    """Finalized colours (V_c), the FIFO queue and its capacity."""

    b: int
    fixed: dict[int, int] = field(default_factory=dict)
    queue: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError("buffer capacity must be >= 1")
        if set(self.fixed) & set(self.queue):
            raise ContractViolation("fixed vertices and queue overlap")
        if len(self.queue) > self.b:
            raise ContractViolation("queue longer than buffer capacity")


@dataclass(frozen=True)
class CandidateColouring:
    assignment: tuple[int, ...]

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.assignment, reverse=True))


@dataclass(frozen=True)
class OutcomeDistribution:
    pmf: dict[int, Fraction]
    branches: int = 0

    def __post_init__(self) -> None:
        if sum(self.pmf.values()) != 1:
            raise ContractViolation("outcome probabilities do not sum to 1")
        if any(p <= 0 for p in self.pmf.values()):
            raise ContractViolation("outcome distribution holds a non-positive mass")

    @property
    def support(self) -> set[int]:
        return set(self.pmf)

    def mean(self) -> Fraction:
        return sum((k * p for k, p in self.pmf.items()), Fraction(0))

    def tail(self, m: int) -> Fraction:
        return sum((p for k, p in self.pmf.items() if k >= m), Fraction(0))

    def __str__(self) -> str:
        return " ".join(f"{k}:{p}" for k, p in sorted(self.pmf.items()))


def colours_used(colouring: Colouring | Mapping[int, int]) -> int:
    if isinstance(colouring, Colouring):
        return colouring.count
    return len(set(colouring.values()))


def first_fit(graph: Graph, order: Sequence[int]) -> Colouring:
    seq = check_order(order, graph.n)
    return Colouring(dict(enumerate(_kernels.first_fit(graph, seq))))


def enumerate_candidates(
    graph: Graph, fixed: Mapping[int, int], queue: Sequence[int]
) -> list[CandidateColouring]:
    """Proper colourings of the queue with least descending-sorted key.

    Colours come from ``1..max(fixed) + len(queue)``.  The list is in
    lexicographic order of the assignment (queue order).
    """
    if not queue:
        raise ContractViolation("queue must be non-empty")
    if len(set(queue)) != len(queue) or set(queue) & set(fixed):
        raise ContractViolation("queue must be distinct vertices outside the fixed set")
    for v, c in fixed.items():
        if c < 1:
            raise ContractViolation(f"vertex {v} has non-positive colour {c}")
        for u in graph.adjacency[v]:
            if fixed.get(u) == c:
                raise ContractViolation(f"fixed colouring improper on edge {v}-{u}")
    colour = [0] * graph.n
    for v, c in fixed.items():
        colour[v] = c
    _, found = _pycore.minimal_assignments(graph.adjacency, colour, list(queue))
    return [CandidateColouring(a) for a in found]


def buffered_colouring(
    graph: Graph,
    order: Sequence[int],
    b: int,
    rand: RandomSource | int = 0,
) -> Colouring:
    """Colour online with a lookahead buffer of ``b`` vertices.

    The first arrival gets colour 1.  Each step takes the least-key
    candidates for the full buffer, draws one uniformly with ``rand`` and
    finalizes only the head; the rest are recomputed next step.  Once
    arrivals run out the buffer drains the same way.  An ``int`` seeds a
    fresh :class:`SplitMix64`.
    """
    if b < 1:
        raise ValueError(f"buffer size must be >= 1, got {b}")
    seq = check_order(order, graph.n)
    if isinstance(rand, int):
        rand = SplitMix64(rand)
    return Colouring(dict(enumerate(_kernels.buffered(graph, seq, b, rand))))


def exact_outcome_distribution(
    graph: Graph, order: Sequence[int], b: int, branch_cap: int = 10**7
) -> OutcomeDistribution:
    """Exact law of the colour count over every random branch.

    Walks the arrival sequence position by position.  When the vertex at
    position t is finalized the buffer is ``order[t:t+b]``, so a state is
    just the colours already fixed; equal states merge and carry summed
    rational mass.  ``branch_cap`` bounds the number of state expansions.
    """
    if b < 1:
        raise ValueError(f"buffer size must be >= 1, got {b}")
    seq = check_order(order, graph.n)
    n = graph.n
    if n == 0:
        return OutcomeDistribution({0: Fraction(1)})
    states: dict[tuple[int, ...], Fraction] = {(1,): Fraction(1)}
    explored = 0
    for t in range(1, n):
        window = seq[t : t + b]
        nxt: dict[tuple[int, ...], Fraction] = {}
        for prefix, mass in states.items():
            explored += 1
            if explored > branch_cap:
                raise BranchCapExceeded(explored - 1, branch_cap)
            fixed = dict(zip(seq, prefix))
            cands = enumerate_candidates(graph, fixed, window)
            share = mass / len(cands)
            for cand in cands:
                key = prefix + (cand.assignment[0],)
                nxt[key] = nxt.get(key, Fraction(0)) + share
        states = nxt
    pmf: dict[int, Fraction] = {}
    for final, mass in states.items():
        k = len(set(final))
        pmf[k] = pmf.get(k, Fraction(0)) + mass
    return OutcomeDistribution(dict(sorted(pmf.items())), branches=explored)


def worst_case_colours(graph: Graph, b: int, order_limit: int = 8) -> int:
    """Most colours the buffered algorithm can use over all n! orders and branches."""
    if graph.n > order_limit:
        raise GraphTooLargeError(
            f"{graph.n}! arrival orders exceed order_limit={order_limit}"
        )
    if b < 1:
        raise ValueError(f"buffer size must be >= 1, got {b}")
    if graph.n == 0:
        return 0
    worst = 0
    for order in permutations(range(graph.n)):
        if b == 1:
            worst = max(worst, first_fit(graph, order).count)
        else:
            worst = max(worst, max(exact_outcome_distribution(graph, order, b).pmf))
        if worst == graph.n:
            break
    return worst


__all__ = [
    "BranchCapExceeded",
    "BufferState",
    "CandidateColouring",
    "Colouring",
    "ContractViolation",
    "GraphError",
    "OutcomeDistribution",
    "RandomSource",
    "buffered_colouring",
    "colours_used",
    "enumerate_candidates",
    "exact_outcome_distribution",
    "first_fit",
    "worst_case_colours",
]
