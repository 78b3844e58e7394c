import random

import networkx as nx
import pytest
from hypothesis import given, settings

from distspec import enumeration as en, graphs as gr
from distspec.matching import (berge_tutte, has_perfect_matching, is_matching, matching_number,
                               maximum_matching, normalize_witness)
from test_graphs import small_graphs, to_nx


def test_examples():
    assert matching_number(gr.complete(4)) == 2
    assert matching_number(gr.star(3)) == 1
    assert matching_number(gr.family_matching(18, 1, 2)) == 8
    assert matching_number(gr.empty(3)) == 0


def test_berge_examples():
    assert berge_tutte(gr.star(3)) == (2, 0b1)
    assert berge_tutte(gr.complete(6))[0] == 0
    g = gr.family_matching(18, 2, 2)
    odd, _ = gr.odd_components(g, 0b11)
    assert odd - 2 == 2 and berge_tutte(g)[0] >= 2
    with pytest.raises(ValueError):
        berge_tutte(gr.complete(25))


def test_perfect_matching():
    assert has_perfect_matching(gr.complete(4))
    assert not has_perfect_matching(gr.family_matching(18, 1, 2))
    assert not has_perfect_matching(gr.complete(5))
    assert has_perfect_matching(gr.cycle(6))


@settings(max_examples=200, deadline=None)
@given(small_graphs(n_max=10))
def test_blossom_against_networkx_and_berge(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    d, S = berge_tutte(g)
    assert 2 * len(m) == g.n - d
    odd, _ = gr.odd_components(g, S)
    assert odd - S.bit_count() == d


def test_witness_is_smallest_mask():
    for mask in range(0, en.num_masks(5), 7):
        g = en.graph_from_mask(5, mask)
        d, S = berge_tutte(g)
        for T in range(S):
            assert gr.odd_components(g, T)[0] - T.bit_count() < d


def test_random_larger_graphs():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(20, 64)
        g = gr.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.08])
        ref = len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
        assert matching_number(g) == ref


def test_normalize_witness():
    for mask in range(0, en.num_masks(6), 13):
        g = en.graph_from_mask(6, mask)
        d, S = berge_tutte(g)
        T = normalize_witness(g, S)
        assert T & S == S
        odd, total = gr.odd_components(g, T)
        assert odd == total and odd - T.bit_count() == d


def test_is_matching_rejects():
    g = gr.path(4)
    assert not is_matching(g, [(0, 1), (1, 2)])
    assert not is_matching(g, [(0, 2)])
