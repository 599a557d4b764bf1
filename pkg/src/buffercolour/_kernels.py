"""Backend selection for the colouring kernels.

The compiled ``_ccore`` extension is used when it imports; otherwise the
pure-Python ``_pycore`` runs.  Set ``BUFFERCOLOUR_PURE_PYTHON=1`` to force
the fallback.  Both backends return identical results for identical seeds.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _pycore
from .graph import Graph
from .rng import SplitMix64

_native = None
if os.environ.get("BUFFERCOLOUR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ccore as _native
    except ImportError:  # pragma: no cover - depends on build
        _native = None

BACKEND = "cython" if _native is not None else "python"


def first_fit(graph: Graph, order: Sequence[int], backend: str | None = None) -> list[int]:
    if _use_native(backend):
        indptr, indices = graph.csr
        return _native.first_fit(indptr, indices, order)
    return _pycore.first_fit(graph.adjacency, order)


def buffered(graph: Graph, order: Sequence[int], b: int, rand, backend: str | None = None) -> list[int]:
    if type(rand) is SplitMix64 and _use_native(backend):
        indptr, indices = graph.csr
        colour, rand.state = _native.buffered(indptr, indices, order, b, rand.state)
        return colour
    return _pycore.buffered(graph.adjacency, order, b, rand)


def trial_counts(
    graph: Graph,
    order: Sequence[int] | None,
    b: int,
    master_seed: int,
    start: int,
    stop: int,
    backend: str | None = None,
) -> np.ndarray:
    if _use_native(backend):
        indptr, indices = graph.csr
        return _native.trial_counts(indptr, indices, order, b, master_seed, start, stop)
    return _pycore.trial_counts(graph.adjacency, order, b, master_seed, start, stop)


def _use_native(backend: str | None) -> bool:
    if backend is None:
        return _native is not None
    if backend == "cython":
        if _native is None:
            raise RuntimeError("compiled backend requested but _ccore is not built")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")
