"""Distance matrices, Perron roots and block quotient matrices."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .graphs import Graph, mask_to_list

DEFAULT_TOL = 1e-13
DEFAULT_MAX_ITER = 10**6


class DisconnectedGraphError(ValueError):
    pass


class PerronConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap; carries the last iterate."""

    def __init__(self, estimate: float, residual: float, vector: np.ndarray, iterations: int):
        super().__init__(f"power iteration did not converge after {iterations} steps "
                         f"(estimate {estimate!r}, residual {residual:.3e})")
        self.estimate = estimate
        self.residual = residual
        self.vector = vector
        self.iterations = iterations


def distance_rows(adj: Sequence[int], n: int) -> list[list[int]]:
    full = (1 << n) - 1
    rows = []
    for src in range(n):
        row = [0] * n
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
            for v in mask_to_list(frontier):
                row[v] = d
        if seen != full:
            raise DisconnectedGraphError("distance matrix of a disconnected graph")
        rows.append(row)
    return rows


def distance_matrix(g: Graph) -> np.ndarray:
    """Integer matrix of BFS distances; raises on disconnected graphs."""
    if g.n == 0:
        raise ValueError("distance matrix of the empty graph")
    return np.array(distance_rows(g.adj, g.n), dtype=np.int64)


def perron_radius(m, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """Perron root of a nonnegative irreducible matrix by power iteration.

    Starts from the all-ones vector and iterates with ``m + I`` (same Perron
    vector, but primitive, so no periodic stalling).  Stops once the relative
    change of the Rayleigh quotient stays below ``tol`` for two successive
    steps.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("perron_radius needs a square matrix")
    if (a < 0).any():
        raise ValueError("perron_radius needs a nonnegative matrix")
    order = a.shape[0]
    if order == 1:
        return float(a[0, 0])
    x = np.ones(order) / np.sqrt(order)
    prev = None
    quiet = 0
    change = np.inf
    lam = 0.0
    for it in range(1, max_iter + 1):
        y = a @ x
        lam = float(x @ y)  # x has unit norm
        y += x
        x = y / np.linalg.norm(y)
        if prev is not None:
            change = abs(lam - prev) / max(abs(lam), 1e-300)
            quiet = quiet + 1 if change < tol else 0
            if quiet >= 2:
                return lam
        prev = lam
    raise PerronConvergenceError(lam, float(change), x, max_iter)


def mu(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Distance spectral radius."""
    if g.n == 1:
        return 0.0
    return perron_radius(distance_matrix(g), tol)


def as_index_partition(partition, order: int) -> list[list[int]]:
    """Accepts lists of indices or bitmasks; checks disjoint, covering, nonempty."""
    classes = []
    for cls in partition:
        idx = mask_to_list(cls) if isinstance(cls, (int, np.integer)) else [int(i) for i in cls]
        if not idx:
            raise ValueError("partition classes must be nonempty")
        classes.append(idx)
    flat = sorted(i for cls in classes for i in cls)
    if flat != list(range(order)):
        raise ValueError("partition classes must be disjoint and cover every index")
    return classes


def quotient_matrix(m, partition) -> tuple[np.ndarray, bool]:
    """Block average-row-sum matrix and whether every block has constant row sums.

    Row sums are compared exactly, so integer input gives an exact verdict.
    """
    a = np.asarray(m)
    classes = as_index_partition(partition, a.shape[0])
    t = len(classes)
    q = np.zeros((t, t))
    equitable = True
    for i, ri in enumerate(classes):
        for j, cj in enumerate(classes):
            sums = a[np.ix_(ri, cj)].sum(axis=1)
            if equitable and not (sums == sums[0]).all():
                equitable = False
            q[i, j] = sums.sum() / len(ri)
    return q, equitable


def quotient_radius(q, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a nonnegative quotient matrix.

    3x3 and smaller go through the exact characteristic polynomial; larger
    ones use power iteration.
    """
    a = np.asarray(q, dtype=float)
    if a.shape[0] <= 3:
        from .forms import charpoly_exact, largest_root

        lower = float(np.min(a.sum(axis=1)))  # Perron root >= min row sum
        upper = 1.0 + float(np.max(np.abs(a).sum(axis=1)))
        return largest_root(charpoly_exact(q), lower - 1e-9, upper)
    return perron_radius(a, tol)
