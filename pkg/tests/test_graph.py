import pytest
from hypothesis import given, settings, strategies as st

from jlab.combinatorics import KSubset, binomial
from jlab.graph import (
    CapacityError,
    DenseGraph,
    JohnsonParams,
    build_full,
    ceil_ratio_size,
    edge_count_implicit,
    edge_count_within,
    export_edge_list,
    import_edge_list,
    johnson_degree,
    random_vertex_set,
    sample_subgraph,
    star_indices,
)
from jlab.oracles import johnson_edges_by_predicate, pairwise_edge_count

PETERSEN = JohnsonParams(5, 2, 0)


@pytest.fixture(scope="module")
def petersen():
    return build_full(PETERSEN)


def test_petersen(petersen):
    assert petersen.vertex_count == 10
    assert petersen.edge_count == 15
    assert {petersen.degree(v) for v in range(10)} == {3}


def test_g631():
    g = build_full(JohnsonParams(6, 3, 1))
    assert g.vertex_count == 20 and g.edge_count == 90
    assert {g.degree(v) for v in range(20)} == {9} == {johnson_degree(g.params)}


def test_single_vertex():
    g = build_full(JohnsonParams(4, 4, 2))
    assert g.vertex_count == 1 and g.edge_count == 0


@pytest.mark.parametrize("n,r,s", [(6, 3, 1), (7, 3, 0), (7, 4, 2), (8, 3, 2)])
def test_edges_match_predicate_oracle(n, r, s):
    g = build_full(JohnsonParams(n, r, s))
    _, edges = johnson_edges_by_predicate(n, r, s)
    assert sorted(g.edges()) == sorted(edges)


def test_params_validation():
    for bad in [(5, 2, 2), (5, 6, 1), (0, 1, 0), (5, 2, -1)]:
        with pytest.raises(ValueError):
            JohnsonParams(*bad)


def test_capacity_error_names_vertex_count():
    with pytest.raises(CapacityError, match="C\\(30,5\\)"):
        build_full(JohnsonParams(30, 5, 1))


def test_sampling_extremes(petersen):
    assert sorted(sample_subgraph(petersen, 1.0, 5).edges()) == sorted(petersen.edges())
    assert sample_subgraph(petersen, 0.0, 5).edge_count == 0


def test_sampling_mean_on_petersen(petersen):
    mean = sum(sample_subgraph(petersen, 0.5, s).edge_count for s in range(1000)) / 1000
    assert abs(mean - 7.5) <= 0.5


def test_resampling_rejected(petersen):
    h = sample_subgraph(petersen, 0.5, 1)
    with pytest.raises(ValueError):
        sample_subgraph(h, 0.5, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 64 - 1), st.floats(0, 1), st.floats(0, 1))
def test_sampling_is_deterministic_and_coupled(seed, p, q):
    g = build_full(JohnsonParams(6, 3, 1))
    a = sample_subgraph(g, p, seed)
    assert a.adjacency_hash() == sample_subgraph(g, p, seed).adjacency_hash()
    lo, hi = sorted((p, q))
    small, big = set(sample_subgraph(g, lo, seed).edges()), set(sample_subgraph(g, hi, seed).edges())
    assert small <= big <= set(g.edges())


def test_edge_count_within(petersen):
    assert edge_count_within(petersen, range(10)) == 15
    assert edge_count_within(petersen, []) == 0
    assert edge_count_within(petersen, [3]) == 0


def test_star_is_edge_free():
    params = JohnsonParams(8, 4, 1)
    g = build_full(params)
    star = star_indices(params, (1, 2))
    assert len(star) == binomial(6, 2)
    assert edge_count_within(g, star) == 0
    assert all(g.vertex(v).elements[:2] == (1, 2) for v in star)


def test_implicit_edge_count_matches_oracle():
    subsets = random_vertex_set(20, 3, 24, seed=4)
    assert edge_count_implicit(subsets, 1) == pairwise_edge_count([u.elements for u in subsets], 1)


def test_ceil_ratio_size_is_exact():
    # 1.2 * 20 evaluates to 24.000000000000004 in floating point
    assert ceil_ratio_size(20, 3) == 24
    assert ceil_ratio_size(21, 3) == 26


def test_edge_list_roundtrip(tmp_path):
    g = build_full(JohnsonParams(7, 3, 1))
    for h in (g, sample_subgraph(g, 0.4, 77)):
        path = tmp_path / "g.txt"
        export_edge_list(h, path)
        back = import_edge_list(path)
        assert back.adjacency_hash() == h.adjacency_hash()
        assert back.provenance == h.provenance


def test_custom_graph_roundtrip(tmp_path):
    g = DenseGraph.from_edges(4, [(0, 1), (2, 3)])
    path = tmp_path / "c.txt"
    export_edge_list(g, path)
    assert import_edge_list(path).adjacency_hash() == g.adjacency_hash()
    assert g.matrix().sum() == 4


def test_vertex_labels(petersen):
    assert petersen.vertex(0) == KSubset((1, 2), 5)
    assert petersen.vertex(9) == KSubset((4, 5), 5)
