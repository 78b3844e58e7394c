import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from distspec import graphs as gr


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def small_graphs(draw, n_min=1, n_max=9):
    n = draw(st.integers(n_min, n_max))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return gr.from_edges(n, [e for e, keep in zip(pairs, bits) if keep])


def test_complete_examples():
    assert gr.complete(1).num_edges() == 0
    k4 = gr.complete(4)
    assert k4.num_edges() == 6 and k4.degrees() == [3] * 4
    assert gr.complete(10).num_edges() == 45
    with pytest.raises(ValueError):
        gr.complete(0)


def test_union_and_join():
    u = gr.disjoint_union(gr.complete(1), gr.complete(1))
    assert u.n == 2 and u.num_edges() == 0
    assert gr.disjoint_union(gr.complete(3), gr.complete(2)).num_edges() == 4
    assert gr.union_all([gr.complete(1)] * 5) == gr.empty(5)
    assert gr.join(gr.complete(1), gr.empty(3)) == gr.star(3)
    assert gr.join(gr.complete(2), gr.complete(2)) == gr.complete(4)
    with pytest.raises(ValueError):
        gr.disjoint_union(gr.complete(40), gr.complete(30))


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        gr.Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        gr.Graph(2, (0b01, 0))  # self-loop
    with pytest.raises(ValueError):
        gr.Graph(2, (0b100, 0))  # neighbour out of range
    with pytest.raises(ValueError):
        gr.from_edges(3, [(1, 1)])


@settings(max_examples=60, deadline=None)
@given(small_graphs(), small_graphs())
def test_join_edges_and_min_degree(g1, g2):
    j = gr.join(g1, g2)
    assert j.num_edges() == g1.num_edges() + g2.num_edges() + g1.n * g2.n
    assert gr.min_degree(j) >= min(gr.min_degree(g1) + g2.n, gr.min_degree(g2) + g1.n)


@settings(max_examples=100, deadline=None)
@given(small_graphs())
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.num_edges()


def test_family_matching_blocks():
    g = gr.family_matching(9, 1, 2, parity=False)
    assert [len(b) for b in g.block_lists()] == [1, 6, 2] and g.n == 9
    g = gr.family_matching(6, 2, 2)
    assert g == gr.join(gr.complete(2), gr.empty(4))
    assert gr.min_degree(g) == 2
    with pytest.raises(ValueError):
        gr.family_matching(17, 1, 2)
    with pytest.raises(ValueError):
        gr.family_matching(9, 1, 2)
    assert gr.family_matching(18, 1, 2).n == 18
    with pytest.raises(ValueError):
        gr.family_matching(10, 5, 2)


def test_family_odd_factor_blocks():
    assert [len(b) for b in gr.family_odd_factor(32, 3, 1).block_lists()] == [3, 25, 4]
    assert [len(b) for b in gr.family_odd_factor(32, 3, 3).block_lists()] == [3, 19, 10]
    assert gr.min_degree(gr.family_odd_factor(32, 3, 1)) == 3
    for bad in [(31, 3, 1), (32, 3, 2), (8, 4, 1)]:
        with pytest.raises(ValueError):
            gr.family_odd_factor(*bad)


def test_family_case3():
    g = gr.family_case3(32, 1, 1, 3)
    assert g == gr.join_of_cliques(1, [25, 3, 3])
    assert [len(b) for b in g.block_lists()] == [1, 25, 6]
    g = gr.family_case3(32, 2, 1, 3)
    assert g == gr.join_of_cliques(2, [24, 2, 2, 2])
    with pytest.raises(ValueError):
        gr.family_case3(10, 1, 1, 3)  # big clique too small
    with pytest.raises(ValueError):
        gr.family_case3(40, 3, 1, 3)  # s must be below delta


@pytest.mark.parametrize("n,s,b,d", [(40, 1, 1, 3), (40, 2, 3, 4), (60, 3, 1, 5)])
def test_case3_vertex_count(n, s, b, d):
    g = gr.family_case3(n, s, b, d)
    assert g.n == n and sum(len(x) for x in g.block_lists()) == n


def test_delete_vertices():
    h, keep = gr.delete_vertices(gr.complete(4), 0b1)
    assert h == gr.complete(3) and keep == [1, 2, 3]
    star = gr.star(3)
    h, _ = gr.delete_vertices(star, 0b1)
    assert h == gr.empty(3)
    g = gr.cycle(5)
    assert gr.delete_vertices(g, 0)[0] == g
    h, _ = gr.delete_vertices(g, g.full_mask)
    assert h.n == 0 and gr.odd_components(h) == (0, 0)


def test_delete_edge():
    k3 = gr.complete(3)
    p = gr.delete_edge(k3, 0, 2)
    assert p == gr.path(3) and p.num_edges() == k3.num_edges() - 1
    assert not gr.is_connected(gr.delete_edge(gr.path(3), 0, 1))
    with pytest.raises(ValueError):
        gr.delete_edge(gr.path(3), 0, 2)


def test_odd_components():
    assert gr.odd_components(gr.star(3), 0b1) == (3, 3)
    assert gr.odd_components(gr.complete(6)) == (0, 1)
    assert gr.odd_components(gr.path(5)) == (1, 1)
    for n, d, b in [(32, 3, 1), (40, 3, 3), (50, 4, 1)]:
        g = gr.family_odd_factor(n, d, b)
        assert gr.odd_components(g, (1 << d) - 1)[0] == b * d + 2


def test_connectivity_examples():
    assert gr.vertex_connectivity(gr.complete(5)) == 4
    assert gr.vertex_connectivity(gr.cycle(5)) == 2
    assert gr.vertex_connectivity(gr.empty(2)) == 0
    g = gr.family_matching(18, 2, 2)
    assert gr.vertex_connectivity(g) == 2
    assert gr.vertex_connectivity_bruteforce(g) == 2


@settings(max_examples=150, deadline=None)
@given(small_graphs(n_min=2, n_max=9))
def test_connectivity_oracles(g):
    k = gr.vertex_connectivity(g)
    assert k == gr.vertex_connectivity_bruteforce(g)
    expected = nx.node_connectivity(to_nx(g)) if gr.is_connected(g) else 0
    assert k == expected


def test_min_degree_and_connected():
    assert gr.min_degree(gr.star(3)) == 1
    assert not gr.is_connected(gr.disjoint_union(gr.complete(1), gr.complete(1)))
    assert gr.is_connected(gr.complete(1))


@settings(max_examples=60, deadline=None)
@given(small_graphs(n_max=7), st.randoms())
def test_isomorphism_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = gr.relabel(g, perm)
    assert gr.is_isomorphic(g, h)
    assert gr.is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_isomorphism_negative():
    assert not gr.is_isomorphic(gr.path(4), gr.star(3))
    assert not gr.is_isomorphic(gr.cycle(6), gr.disjoint_union(gr.cycle(3), gr.cycle(3)))
