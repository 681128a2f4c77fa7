import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctqwalk.graphs import (
    complete_graph,
    extremal_degree_vertex,
    generate_erdos_renyi,
    graph_from_edges,
    laplacian,
    read_edge_list,
    write_edge_list,
)


def test_generation_is_deterministic_per_seed():
    a = generate_erdos_renyi(5, 0.4, seed=7)
    b = generate_erdos_renyi(5, 0.4, seed=7)
    c = generate_erdos_renyi(5, 0.4, seed=8)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_edge_probability_extremes():
    assert generate_erdos_renyi(4, 0.0, seed=1).edges == frozenset()
    full = generate_erdos_renyi(4, 1.0, seed=1)
    assert full.edges == complete_graph(4).edges
    assert len(full.edges) == 16 * 15 // 2


def test_edge_density_tracks_p():
    counts = [len(generate_erdos_renyi(6, 0.3, seed=s).edges) for s in range(20)]
    total_possible = 64 * 63 // 2
    assert abs(np.mean(counts) / total_possible - 0.3) < 0.03


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 5),
       p=st.floats(0.0, 1.0),
       seed=st.integers(0, 10_000))
def test_laplacian_structure(n, p, seed):
    g = generate_erdos_renyi(n, p, seed)
    L = laplacian(g)
    assert L.shape == (g.N, g.N)
    assert np.array_equal(L, L.T)
    assert np.all(L.sum(axis=1) == 0)
    assert np.array_equal(np.diag(L), g.degrees())
    off = L - np.diag(np.diag(L))
    assert set(np.unique(off)) <= {-1, 0}


def test_complete_graph_degrees():
    g = complete_graph(3)
    assert np.all(g.degrees() == 7)
    L = laplacian(g)
    # K_N Laplacian spectrum is {0, N, ..., N}
    evals = np.linalg.eigvalsh(L.astype(float))
    assert np.allclose(sorted(evals), [0.0] + [8.0] * 7, atol=1e-10)


def test_extremal_degree_vertex_tie_breaks_low():
    g = graph_from_edges(2, [(0, 1), (1, 2), (2, 3), (3, 0)])  # 4-cycle
    assert extremal_degree_vertex(g, "min") == 0
    assert extremal_degree_vertex(g, "max") == 0
    path = graph_from_edges(2, [(0, 1), (1, 2)])  # vertex 3 isolated
    assert extremal_degree_vertex(path, "min") == 3
    assert extremal_degree_vertex(path, "max") == 1


@settings(max_examples=25, deadline=None)
@given(n=st.integers(1, 4), p=st.floats(0.0, 1.0), seed=st.integers(0, 1000))
def test_edge_list_roundtrip(n, p, seed):
    g = generate_erdos_renyi(n, p, seed)
    buf = io.StringIO()
    write_edge_list(g, buf, p=p, seed=seed)
    buf.seek(0)
    g2, p2, seed2 = read_edge_list(buf)
    assert g2 == g
    assert p2 == p and seed2 == seed


def test_edge_list_optional_metadata():
    g = graph_from_edges(1, [(0, 1)])
    buf = io.StringIO()
    write_edge_list(g, buf)
    assert buf.getvalue().splitlines()[0] == "1 - -"
    buf.seek(0)
    g2, p2, seed2 = read_edge_list(buf)
    assert g2 == g and p2 is None and seed2 is None


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        graph_from_edges(1, [(0, 0)])
    with pytest.raises(ValueError):
        graph_from_edges(1, [(0, 2)])
