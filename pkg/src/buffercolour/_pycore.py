"""Pure-Python colouring kernels.

Used when the compiled ``_ccore`` extension is unavailable or disabled.
Each function matches its ``_ccore`` counterpart draw for draw, so a given
seed gives the same colouring on either backend.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

import numpy as np

from .rng import COLOUR_STREAM, ORDER_STREAM, SplitMix64, derive_seed, shuffle


def first_fit(adjacency: Sequence[frozenset[int]], order: Sequence[int]) -> list[int]:
    colour = [0] * len(adjacency)
    for v in order:
        taken = {colour[u] for u in adjacency[v]}
        c = 1
        while c in taken:
            c += 1
        colour[v] = c
    return colour


def minimal_assignments(
    adjacency: Sequence[frozenset[int]],
    colour: Sequence[int],
    queue: Sequence[int],
) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Proper colourings of ``queue`` whose descending-sorted key is least.

    ``colour[v] > 0`` marks v as fixed.  Colours range over
    ``1..max(colour) + len(queue)``.  Assignments come back in lexicographic
    order (queue order), which is also the depth-first visiting order.
    """
    q = len(queue)
    universe = max(colour, default=0) + q
    blocked = [{colour[u] for u in adjacency[v]} for v in queue]
    earlier = [
        [j for j in range(i) if queue[j] in adjacency[queue[i]]] for i in range(q)
    ]
    assign = [0] * q
    best: list[int] | None = None
    found: list[tuple[int, ...]] = []

    def descend(i: int) -> None:
        nonlocal best, found
        for c in range(1, universe + 1):
            if best is not None and c > best[0]:
                return
            if c in blocked[i] or any(assign[j] == c for j in earlier[i]):
                continue
            assign[i] = c
            key = sorted(assign[: i + 1], reverse=True) + [0] * (q - i - 1)
            if best is not None and key > best:
                continue
            if i + 1 < q:
                descend(i + 1)
            elif best is None or key < best:
                best = key
                found = [tuple(assign)]
            else:
                found.append(tuple(assign))
        assign[i] = 0

    descend(0)
    assert best is not None, "colour universe always admits a proper assignment"
    return tuple(best), found


def buffered(
    adjacency: Sequence[frozenset[int]],
    order: Sequence[int],
    b: int,
    rand,
) -> list[int]:
    """Lookahead colouring with a FIFO buffer of capacity ``b``.

    ``rand`` is anything exposing ``uniform_below(r)``.
    """
    colour = [0] * len(adjacency)
    if not order:
        return colour
    colour[order[0]] = 1
    arrivals = iter(order[1:])
    queue: deque[int] = deque()
    pending = True
    while True:
        while pending and len(queue) < b:
            v = next(arrivals, None)
            if v is None:
                pending = False
            else:
                queue.append(v)
        if not queue:
            break
        _, cands = minimal_assignments(adjacency, colour, queue)
        pick = cands[rand.uniform_below(len(cands))]
        colour[queue.popleft()] = pick[0]
    return colour


def distinct(colour: Sequence[int]) -> int:
    return len(set(colour))


def trial_counts(
    adjacency: Sequence[frozenset[int]],
    order: Sequence[int] | None,
    b: int,
    master_seed: int,
    start: int,
    stop: int,
) -> np.ndarray:
    """Colour counts for repetitions ``start..stop-1``.

    ``order=None`` draws a fresh uniform arrival order per repetition.
    """
    n = len(adjacency)
    out = np.empty(stop - start, dtype=np.int64)
    for rep in range(start, stop):
        if order is None:
            seq = shuffle(list(range(n)), SplitMix64(derive_seed(master_seed, rep, ORDER_STREAM)))
        else:
            seq = order
        if b == 1:
            colour = first_fit(adjacency, seq)
        else:
            rand = SplitMix64(derive_seed(master_seed, rep, COLOUR_STREAM))
            colour = buffered(adjacency, seq, b, rand)
        out[rep - start] = distinct(colour)
    return out
