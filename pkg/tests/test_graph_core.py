import itertools
import random
from collections import defaultdict

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph, random_graphs, to_nx
from oracles import brute_canonical
from pkturan.errors import CapacityError, Graph6Error, LoopError
from pkturan.graph_core import (add_edge, canonical_form, complete_graph, cycle_graph,
                                from_edges, from_graph6, neighborhood_induced, new_graph,
                                path_graph, read_graph6_file, star_graph, to_graph6)


def test_new_graph_empty():
    g = new_graph(0)
    assert g.n == 0 and g.num_edges() == 0
    g = new_graph(5)
    assert g.n == 5 and g.num_edges() == 0
    g.check_invariants()


def test_new_graph_capacity():
    new_graph(4096)
    with pytest.raises(CapacityError):
        new_graph(4097)


def test_add_edge():
    g = add_edge(new_graph(2), 0, 1)
    assert g.num_edges() == 1
    assert add_edge(g, 1, 0).num_edges() == 1
    g.check_invariants()
    with pytest.raises(LoopError):
        add_edge(new_graph(3), 2, 2)
    with pytest.raises(IndexError):
        add_edge(new_graph(3), 0, 3)


def test_add_edge_returns_new_value():
    g = new_graph(3)
    h = g.add_edge(0, 2)
    assert g.num_edges() == 0 and h.has_edge(2, 0)


def test_random_mutations_keep_invariants():
    rng = random.Random(3)
    g = new_graph(20)
    for _ in range(300):
        i, j = rng.sample(range(20), 2)
        g = g.add_edge(i, j) if rng.random() < 0.7 else g.remove_edge(i, j)
        g.check_invariants()


@pytest.mark.parametrize("g,centre,expected_n,expected_e", [
    (complete_graph(4), 0, 3, 3),
    (star_graph(3), 0, 3, 0),
    (cycle_graph(5), 0, 2, 0),
])
def test_neighborhood_induced(g, centre, expected_n, expected_e):
    h, vmap = neighborhood_induced(g, centre)
    assert (h.n, h.num_edges()) == (expected_n, expected_e)
    assert vmap == g.neighbors(centre)
    for a, b in h.edges():
        assert g.has_edge(vmap[a], vmap[b])


def test_neighborhood_induced_range():
    with pytest.raises(IndexError):
        neighborhood_induced(new_graph(3), 3)


def test_graph6_examples():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(new_graph(1)) == "@"
    assert from_graph6("C~") == complete_graph(4)
    # independent decoder agrees
    assert nx.is_isomorphic(nx.from_graph6_bytes(b"C~"), nx.complete_graph(4))
    assert sorted(nx.from_graph6_bytes(b"C~").edges()) == sorted(complete_graph(4).edges())


def test_graph6_matches_networkx_encoder():
    for g in random_graphs(200, 70, seed=11):
        expected = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
        assert to_graph6(g) == expected


def test_graph6_round_trip_1000():
    for g in random_graphs(1000, 40, seed=5):
        assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", [62, 63, 100, 300])
def test_graph6_long_header(n):
    g = random_graph(n, 0.1, random.Random(n))
    s = to_graph6(g)
    assert (s[0] == "~") == (n >= 63)
    assert from_graph6(s) == g
    h = nx.from_graph6_bytes(s.encode())
    assert sorted(h.edges()) == sorted(g.edges())


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<C~\n") == complete_graph(4)


@pytest.mark.parametrize("bad,offset", [
    ("C", 1),       # K4 needs one body byte
    ("C~~", 2),     # trailing byte
    ("C\x10", 1),   # out-of-range byte
    ("~??", 3),     # truncated long header
    ("", 0),
])
def test_graph6_parse_errors(bad, offset):
    with pytest.raises(Graph6Error) as info:
        from_graph6(bad)
    assert info.value.offset == offset


def test_read_graph6_file_reports_line(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("C~\nC\n")
    with pytest.raises(Graph6Error, match="line 2"):
        read_graph6_file(p)


@given(st.integers(1, 25).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_graph6_round_trip_property(data):
    n, pairs = data
    g = from_edges(n, [(a, b) for a, b in pairs if a != b])
    assert from_graph6(to_graph6(g)) == g


# ---------------------------------------------------------------------------
# canonical form

def _all_forms(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for b, p in enumerate(pairs) if (mask >> b) & 1]
        yield edges, canonical_form(from_edges(n, edges))


@pytest.mark.parametrize("n,classes", [(4, 11), (5, 34)])
def test_canonical_partition_matches_brute_force(n, classes):
    by_form = defaultdict(set)
    by_brute = defaultdict(set)
    for idx, (edges, form) in enumerate(_all_forms(n)):
        by_form[form].add(idx)
        by_brute[brute_canonical(n, edges)].add(idx)
    assert len(by_form) == classes
    assert sorted(map(sorted, by_form.values())) == sorted(map(sorted, by_brute.values()))


def test_c5_relabelings_agree():
    rng = random.Random(0)
    c5 = cycle_graph(5)
    for _ in range(10):
        perm = list(range(5))
        rng.shuffle(perm)
        assert canonical_form(c5.relabel(perm)) == canonical_form(c5)


def test_c4_vs_p4():
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))


def test_permutation_invariance_50():
    rng = random.Random(42)
    for g in random_graphs(40, 10, seed=8):
        form = canonical_form(g)
        for _ in range(50):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == form


def test_canonical_form_vs_networkx_isomorphism():
    graphs = random_graphs(300, 8, seed=21, min_n=6)
    rng = random.Random(2)
    for _ in range(1500):
        g, h = rng.sample(graphs, 2)
        if g.n != h.n:
            continue
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


@pytest.mark.parametrize("g", [new_graph(16), complete_graph(16), cycle_graph(16),
                               from_edges(16, [(i, i + 8) for i in range(8)])])
def test_canonical_form_symmetric_graphs_fast(g):
    canonical_form(g)


def test_canonical_form_capacity():
    with pytest.raises(CapacityError):
        canonical_form(new_graph(17))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))), st.permutations(range(n)))))
def test_canonical_form_invariance_property(data):
    n, pairs, perm = data
    g = from_edges(n, [(a, b) for a, b in pairs if a != b])
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    assert isinstance(canonical_form(g), bytes)
