import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import atlas, random_graph, random_graphs
from oracles import brute_triangles, contains_suspension, longest_path_order
from pkturan.constructions import build_Hn, construction_parts, ConstructionSpec
from pkturan.errors import PartitionError
from pkturan.graph_core import (complete_graph, cycle_graph, from_edges, new_graph,
                                path_graph, star_graph)
from pkturan.patterns import (Bipartition, classify_triangles, count_triangles,
                              count_triangles_at, find_path, has_path, is_suspension_pk_free,
                              suspension, suspension_witness)


def wheel(rim):
    return suspension(cycle_graph(rim))


@pytest.mark.parametrize("g,k,expected", [
    (path_graph(5), 5, True),
    (complete_graph(4), 5, False),
    (star_graph(3), 4, False),
    (cycle_graph(5), 5, True),
    (new_graph(0), 1, False),
    (new_graph(1), 1, True),
    (new_graph(3), 2, False),
])
def test_has_path_examples(g, k, expected):
    assert has_path(g, k) is expected


def test_has_path_rejects_k0():
    with pytest.raises(ValueError):
        has_path(complete_graph(3), 0)


def test_find_path_returns_real_path():
    for g in random_graphs(200, 10, seed=4):
        for k in range(1, g.n + 1):
            p = find_path(g, k)
            if p is not None:
                assert len(p) == len(set(p)) == k
                assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def test_has_path_matches_enumeration_atlas():
    for n in range(1, 8):
        for _, edges in atlas(n):
            g = from_edges(n, edges)
            longest = longest_path_order(n, edges)
            for k in range(1, 8):
                assert has_path(g, k) == (k <= longest), (n, edges, k)


def test_has_path_large_bipartite_neighbourhood():
    # K_{3,200}: longest path has 7 vertices; twin pruning keeps this instant
    g = from_edges(203, [(i, j) for i in range(3) for j in range(3, 203)])
    assert has_path(g, 7)
    assert not has_path(g, 8)


@pytest.mark.parametrize("f,expected", [
    (complete_graph(3), complete_graph(4)),
    (new_graph(0), new_graph(1)),
])
def test_suspension_examples(f, expected):
    assert suspension(f) == expected


def test_suspension_of_c4_is_wheel():
    w = wheel(4)
    assert w.n == 5 and w.num_edges() == 8
    assert w.degree(4) == 4 and all(w.degree(v) == 3 for v in range(4))
    assert w.induced(range(4))[0] == cycle_graph(4)


@pytest.mark.parametrize("g,k,expected", [
    (complete_graph(5), 5, True),
    (complete_graph(6), 5, False),
    (build_Hn(12), 5, True),
    (wheel(5), 5, False),
])
def test_freeness_examples(g, k, expected):
    assert is_suspension_pk_free(g, k) is expected


def test_k6_freeness_confirmed_by_embedding():
    assert contains_suspension(6, list(complete_graph(6).edges()), 5)
    assert not contains_suspension(5, list(complete_graph(5).edges()), 5)


def test_suspension_witness_certificate():
    for g in random_graphs(150, 11, seed=9):
        for k in (4, 5):
            wit = suspension_witness(g, k)
            if wit is None:
                continue
            v, path = wit
            assert len(set(path)) == k and v not in path
            assert all(g.has_edge(v, x) for x in path)
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


@pytest.mark.parametrize("k", [4, 5])
def test_freeness_matches_embedding_n6(k):
    for _, edges in atlas(6):
        g = from_edges(6, edges)
        assert is_suspension_pk_free(g, k) == (not contains_suspension(6, edges, k))


@pytest.mark.parametrize("g,expected", [
    (complete_graph(4), 4),
    (build_Hn(8), 8),
    (cycle_graph(5), 0),
])
def test_count_triangles_examples(g, expected):
    assert count_triangles(g) == expected


def test_count_triangles_Fnk_8_6():
    assert count_triangles(ConstructionSpec("Fnk", 8, 6).build()) == 16


def test_count_triangles_matches_brute():
    for g in random_graphs(300, 12, seed=1):
        assert count_triangles(g) == brute_triangles(g.n, list(g.edges()))


def test_count_triangles_at_examples():
    assert all(count_triangles_at(complete_graph(4), v) == 3 for v in range(4))
    assert all(count_triangles_at(cycle_graph(5), v) == 0 for v in range(5))
    h8 = build_Hn(8)
    # vertex 0 is matched to 1 and sees all of B = {4..7}
    assert count_triangles_at(h8, 0) == 4
    assert sum(1 for a, b in h8.induced(h8.neighbors(0))[0].edges()) == 4
    with pytest.raises(IndexError):
        count_triangles_at(h8, 8)


def test_handshake_500():
    for g in random_graphs(500, 12, seed=17):
        assert sum(count_triangles_at(g, v) for v in range(g.n)) == 3 * count_triangles(g)


def test_classify_examples():
    k3 = complete_graph(3)
    assert classify_triangles(k3, Bipartition.from_part1(3, [0, 1, 2])).__dict__ == \
        {"t1": 0, "t2": 0, "t3": 1}
    h8 = build_Hn(8)
    parts = construction_parts(ConstructionSpec("Hn", 8))
    c = classify_triangles(h8, parts)
    assert (c.t1, c.t2, c.t3) == (8, 0, 0)


def _brute_classify(g, part1):
    t = [0, 0, 0]
    for a, b, c in ((a, b, c) for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            inside = sum(x in part1 for x in (a, b, c))
            t[{2: 0, 1: 1}.get(inside, 2)] += 1
    return tuple(t)


def test_classify_matches_enumeration():
    rng = random.Random(6)
    for g in random_graphs(200, 10, seed=12):
        part1 = {v for v in range(g.n) if rng.random() < 0.5}
        c = classify_triangles(g, Bipartition.from_part1(g.n, part1))
        assert (c.t1, c.t2, c.t3) == _brute_classify(g, part1)
        assert c.total == count_triangles(g)


def test_classify_invalid_partition():
    g = complete_graph(4)
    with pytest.raises(PartitionError):
        classify_triangles(g, Bipartition(0b0011, 0b0110))
    with pytest.raises(PartitionError):
        classify_triangles(g, Bipartition(0b0001, 0b0010))


def test_edge_addition_never_decreases_triangles():
    rng = random.Random(23)
    for g in random_graphs(300, 12, seed=23, min_n=2):
        i, j = rng.sample(range(g.n), 2)
        assert count_triangles(g.add_edge(i, j)) >= count_triangles(g)


def test_freeness_hereditary_under_edge_deletion():
    rng = random.Random(31)
    checked = 0
    for g in random_graphs(400, 12, seed=31):
        edges = list(g.edges())
        if not edges:
            continue
        for k in (4, 5):
            if is_suspension_pk_free(g, k):
                checked += 1
                a, b = rng.choice(edges)
                assert is_suspension_pk_free(g.remove_edge(a, b), k)
    assert checked > 100


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 9), st.floats(0.2, 0.9), st.integers(0, 10**6), st.sampled_from([4, 5]))
def test_freeness_agrees_with_embedding_random(n, p, seed, k):
    g = random_graph(n, p, random.Random(seed))
    assert is_suspension_pk_free(g, k) == (not contains_suspension(n, list(g.edges()), k))
