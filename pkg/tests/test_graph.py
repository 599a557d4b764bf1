from collections import Counter
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from buffercolour.graph import (
    EdgeListParseError,
    Graph,
    GraphError,
    GraphTooLargeError,
    alternate_order,
    check_order,
    chromatic_number_exact,
    complete_graph,
    crown_graph,
    from_one_based,
    graph_from_edge_list,
    kneser_graph,
    linear_order,
    random_order,
)


def _is_valid(g: Graph) -> bool:
    return all(
        v not in g.adjacency[v] and all(0 <= u < g.n and v in g.adjacency[u] for u in g.adjacency[v])
        for v in range(g.n)
    )


def test_crown_2():
    g = crown_graph(2)
    assert g.n == 4
    assert g.edges() == [(0, 3), (1, 2)]


def test_crown_4_regular():
    g = crown_graph(4)
    assert g.n == 8 and g.edge_count == 12
    assert {g.degree(v) for v in range(8)} == {3}


def test_crown_1_and_0():
    assert crown_graph(1).edge_count == 0
    with pytest.raises(GraphError):
        crown_graph(0)


@given(st.integers(1, 25))
def test_crown_edge_count_and_bipartite(n):
    g = crown_graph(n)
    assert _is_valid(g)
    assert g.edge_count == n * (n - 1)
    assert all((u < n) != (v < n) for u, v in g.edges())
    for i in range(n):
        for j in range(n):
            assert g.has_edge(i, n + j) == (i != j)


def test_petersen():
    g = kneser_graph(5, 2)
    assert g.n == 10 and g.edge_count == 15
    assert {g.degree(v) for v in range(10)} == {3}
    assert g.labels[0] == "{1,2}" and g.labels[1] == "{1,3}" and g.labels[9] == "{4,5}"


def test_kneser_empty_and_complete():
    assert kneser_graph(5, 3).edge_count == 0
    assert kneser_graph(5, 3).n == 10
    assert kneser_graph(4, 1).edge_count == 6


def test_kneser_rejects_k_above_n():
    with pytest.raises(GraphError):
        kneser_graph(3, 4)


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_kneser_counts(nk):
    n, k = nk
    g = kneser_graph(n, k)
    assert _is_valid(g)
    assert g.n == comb(n, k)
    assert {g.degree(v) for v in range(g.n)} == {comb(n - k, k)}


def test_edge_list_path():
    g = graph_from_edge_list("3\n0 1\n1 2")
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]


def test_edge_list_self_loop():
    with pytest.raises(EdgeListParseError, match="self-loop") as info:
        graph_from_edge_list("2\n0 0")
    assert info.value.lineno == 2


def test_edge_list_duplicates_collapse():
    g = graph_from_edge_list("4\n0 1\n0 1\n1 0")
    assert g.n == 4 and g.edge_count == 1


@pytest.mark.parametrize(
    "text, reason",
    [
        ("3\n0 5", "out of range"),
        ("3\n0 1 2", "two vertex indices"),
        ("3\n0 x", "not an integer"),
        ("x\n", "not an integer"),
        ("# only a comment\n", "missing vertex count"),
    ],
)
def test_edge_list_errors(text, reason):
    with pytest.raises(EdgeListParseError, match=reason):
        graph_from_edge_list(text)


def test_edge_list_comments_and_blanks():
    g = graph_from_edge_list("# header\n3\n\n# edge\n0 2\n")
    assert g.edges() == [(0, 2)]


def test_graph_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


def test_orders():
    assert alternate_order(2) == [0, 2, 1, 3]
    assert linear_order(2) == [0, 1, 2, 3]
    assert alternate_order(3) == [0, 3, 1, 4, 2, 5]
    with pytest.raises(GraphError):
        alternate_order(0)
    with pytest.raises(GraphError):
        linear_order(0)


@given(st.integers(1, 40))
def test_crown_orders_are_permutations(n):
    assert sorted(alternate_order(n)) == list(range(2 * n))
    assert sorted(linear_order(n)) == list(range(2 * n))


@given(st.integers(0, 60), st.integers(0, 2**64 - 1))
def test_random_order_is_permutation(n, seed):
    assert sorted(random_order(n, seed)) == list(range(n))


def test_random_order_deterministic():
    g = kneser_graph(6, 2)
    assert random_order(g, 11) == random_order(g, 11)
    assert random_order(1, 3) == [0]


def test_random_order_uniform_on_three():
    counts = Counter(tuple(random_order(3, seed)) for seed in range(10_000))
    assert set(counts) == set(permutations(range(3)))
    for c in counts.values():
        assert abs(c / 10_000 - 1 / 6) < 0.02


def test_check_order_rejects_repeats():
    with pytest.raises(GraphError):
        check_order([0, 0, 1], 3)


def test_from_one_based():
    assert from_one_based([8, 1, 5]) == [7, 0, 4]


@pytest.mark.parametrize("engine", ["sat", "dsatur"])
def test_chromatic_examples(engine):
    assert chromatic_number_exact(crown_graph(5), engine=engine) == 2
    assert chromatic_number_exact(kneser_graph(5, 2), engine=engine) == 3
    assert chromatic_number_exact(complete_graph(4), engine=engine) == 4
    assert chromatic_number_exact(kneser_graph(5, 3), engine=engine) == 1
    assert chromatic_number_exact(Graph.from_edges(0, []), engine=engine) == 0


def test_chromatic_size_guard():
    with pytest.raises(GraphTooLargeError, match="kneser_chromatic"):
        chromatic_number_exact(kneser_graph(7, 2))


def _brute_chromatic(g: Graph) -> int:
    from itertools import product

    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for cols in product(range(k), repeat=g.n):
            if all(cols[u] != cols[v] for u, v in g.edges()):
                return k
    raise AssertionError


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.sampled_from(["sat", "dsatur"]))
def test_chromatic_matches_brute_force(g, engine):
    assert chromatic_number_exact(g, engine=engine) == _brute_chromatic(g)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 10) for k in range(1, n // 2 + 1)])
def test_kneser_chromatic_small(n, k):
    assert chromatic_number_exact(kneser_graph(n, k), vertex_limit=200) == n - 2 * k + 2


def test_csr_matches_adjacency():
    g = kneser_graph(6, 2)
    indptr, indices = g.csr
    for v in range(g.n):
        assert set(indices[indptr[v] : indptr[v + 1]].tolist()) == g.adjacency[v]
