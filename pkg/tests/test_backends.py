"""The compiled and pure-Python kernels must agree bit for bit."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from buffercolour import _kernels
from buffercolour.graph import Graph, crown_graph, kneser_graph, random_order
from buffercolour.rng import SplitMix64

needs_native = pytest.mark.skipif(_kernels.BACKEND != "cython", reason="compiled core not built")


@st.composite
def instances(draw):
    n = draw(st.integers(0, 18))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges), list(draw(st.permutations(range(n))))


@needs_native
@settings(max_examples=300, deadline=None)
@given(instances(), st.integers(1, 6), st.integers(0, 2**64 - 1))
def test_buffered_identical(inst, b, seed):
    g, order = inst
    r_py, r_c = SplitMix64(seed), SplitMix64(seed)
    py = _kernels.buffered(g, order, b, r_py, backend="python")
    c = _kernels.buffered(g, order, b, r_c, backend="cython")
    assert py == c
    assert r_py.state == r_c.state


@needs_native
@settings(max_examples=100, deadline=None)
@given(instances())
def test_first_fit_identical(inst):
    g, order = inst
    assert _kernels.first_fit(g, order, backend="python") == _kernels.first_fit(g, order, backend="cython")


@needs_native
@pytest.mark.parametrize("graph", [crown_graph(7), kneser_graph(7, 2), kneser_graph(8, 3)], ids=str)
@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("fixed", [False, True])
def test_trial_counts_identical(graph, b, fixed):
    order = random_order(graph, 5) if fixed else None
    py = _kernels.trial_counts(graph, order, b, 123, 10, 70, backend="python")
    c = _kernels.trial_counts(graph, order, b, 123, 10, 70, backend="cython")
    np.testing.assert_array_equal(py, c)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.first_fit(crown_graph(2), [0, 1, 2, 3], backend="fortran")


def test_forced_fallback_runs():
    import os
    import subprocess
    import sys

    code = (
        "from buffercolour import BACKEND, buffered_colouring, kneser_graph, random_order;"
        "g = kneser_graph(6, 2);"
        "print(BACKEND, buffered_colouring(g, random_order(g, 1), 2, 1).count)"
    )
    env = dict(os.environ, BUFFERCOLOUR_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, count = out.stdout.split()
    assert backend == "python"
    from buffercolour import buffered_colouring, kneser_graph, random_order

    g = kneser_graph(6, 2)
    assert int(count) == buffered_colouring(g, random_order(g, 1), 2, 1).count
