import math
import random

import numpy as np
import pytest

from distspec import enumeration as en, graphs as gr
from distspec.spectral import (DisconnectedGraphError, PerronConvergenceError, distance_matrix,
                               mu, perron_radius, quotient_matrix, quotient_radius)


def random_connected(rng, n, p):
    while True:
        g = gr.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])
        if gr.is_connected(g):
            return g


def test_distance_matrix_examples():
    assert (distance_matrix(gr.complete(3)) == 1 - np.eye(3, dtype=int)).all()
    d = distance_matrix(gr.path(3))
    assert d[0, 2] == 2 and (d == d.T).all() and (np.diag(d) == 0).all()
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(gr.empty(2))


def test_family_distance_blocks():
    g = gr.family_matching(9, 1, 2, parity=False)
    d = distance_matrix(g)
    join, clique, indep = g.block_lists()
    assert set(np.unique(d[~np.eye(9, dtype=bool)])) == {1, 2}
    for i in indep:
        for j in indep + clique:
            if i != j:
                assert d[i, j] == 2
    for i in clique:
        for j in clique:
            if i != j:
                assert d[i, j] == 1


def test_perron_examples():
    for n in (2, 5, 17):
        assert abs(mu(gr.complete(n)) - (n - 1)) < 1e-10
    assert abs(mu(gr.path(3)) - (1 + math.sqrt(3))) < 1e-12
    assert mu(gr.complete(1)) == 0.0


def test_power_iteration_vs_eigvalsh():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 30)
        g = random_connected(rng, n, rng.uniform(0.1, 0.7))
        d = distance_matrix(g)
        ref = np.linalg.eigvalsh(d.astype(float))[-1]
        assert abs(perron_radius(d) - ref) <= 1e-8 * ref


def test_lower_bound_small_graphs():
    for n in range(2, 6):
        for g in en.connected_graphs(n):
            val = mu(g)
            if g.num_edges() == n * (n - 1) // 2:
                assert abs(val - (n - 1)) < 1e-9
            else:
                assert val > n - 1 + 1e-7


def test_convergence_error_carries_state():
    with pytest.raises(PerronConvergenceError) as info:
        perron_radius(distance_matrix(gr.path(6)), max_iter=3)
    err = info.value
    assert err.iterations == 3 and err.vector.shape == (6,) and err.estimate > 0


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        perron_radius(np.array([[0, -1], [-1, 0]]))
    with pytest.raises(ValueError):
        perron_radius(np.ones((2, 3)))


def test_quotient_examples():
    q, eq = quotient_matrix(distance_matrix(gr.complete(4)), [[0, 1], [2, 3]])
    assert eq and (q == [[1, 2], [2, 1]]).all()
    d4 = distance_matrix(gr.path(4))
    assert quotient_matrix(d4, [[0, 3], [1, 2]])[1]
    assert not quotient_matrix(d4, [[0], [1, 2, 3]])[1]
    g = gr.family_matching(9, 1, 2, parity=False)
    q, eq = quotient_matrix(distance_matrix(g), g.blocks)
    assert eq and (q == [[0, 6, 2], [1, 5, 4], [1, 12, 2]]).all()


def test_quotient_partition_errors():
    d = distance_matrix(gr.complete(3))
    for bad in ([[0, 1]], [[0, 1], [1, 2]], [[0, 1, 2], []]):
        with pytest.raises(ValueError):
            quotient_matrix(d, bad)


def test_quotient_radius_matches_full():
    rng = random.Random(3)
    # Equitable partitions from joins of cliques, 2 to 5 classes.
    for _ in range(30):
        sizes = [rng.randint(1, 5) for _ in range(rng.randint(1, 4))]
        s = rng.randint(1, 3)
        g = gr.join_of_cliques(s, sizes)
        q, eq = quotient_matrix(distance_matrix(g), g.blocks)
        assert eq
        assert abs(quotient_radius(q) - mu(g)) <= 1e-8 * mu(g)
