"""Odd [1,b]-factors: the deletion criterion ``o(G-S) <= b|S|`` and a direct
backtracking search for the spanning subgraph itself."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, mask_to_list
from .matching import _TABLE_MAX_N, SUBSET_CAP, odd_count, odd_count_table

SEARCH_MAX_N = 12
SEARCH_MAX_EDGES = 30


@dataclass(frozen=True)
class FactorResult:
    exists: bool
    factor: tuple[tuple[int, int], ...] | None = None
    barrier: int | None = None  # bitmask S with o(G-S) > b|S|

    @property
    def verdict(self) -> str:
        return "exists" if self.exists else "violated"

    def barrier_vertices(self) -> list[int] | None:
        return None if self.barrier is None else mask_to_list(self.barrier)


def _check_b(b: int) -> None:
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be a positive odd integer, got {b}")


def amahashi_check(g: Graph, b: int, max_subsets: int = 1 << SUBSET_CAP) -> FactorResult:
    """Scan subsets ``S`` in increasing bitmask order for ``o(G-S) > b|S|``.

    Returns the first (smallest) violating ``S``.  A clean verdict needs all
    ``2^n`` subsets, so graphs beyond ``max_subsets`` are only decided when a
    violation turns up within that budget.
    """
    _check_b(b)
    n = g.n
    full = g.full_mask
    total = 1 << n
    if n <= _TABLE_MAX_N:
        table = odd_count_table(n, g.adj)
        count = lambda S: table[full ^ S]  # noqa: E731
    else:
        count = lambda S: odd_count(g.adj, full ^ S)  # noqa: E731
    for S in range(min(total, max_subsets)):
        o = count(S)
        size = S.bit_count()
        if n % 2 == 0 and (o - size) % 2:
            raise AssertionError(f"parity broken: o={o}, |S|={size} with n even")
        if o > b * size:
            return FactorResult(False, barrier=S)
    if total > max_subsets:
        raise ValueError(f"no violation among the first {max_subsets} subsets; "
                         f"a full scan of 2^{n} subsets is beyond the cap")
    return FactorResult(True)


def is_odd_factor(g: Graph, edges, b: int) -> bool:
    deg = [0] * g.n
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        deg[u] += 1
        deg[v] += 1
    return all(d % 2 == 1 and d <= b for d in deg)


def find_odd_factor(g: Graph, b: int) -> FactorResult:
    """Backtracking search for a spanning subgraph with every degree odd and at most ``b``.

    Vertices are settled in descending-degree order: when a vertex is
    reached, its edges to unsettled vertices are chosen so its own degree
    ends odd in ``[1, b]``.  ``barrier`` is left empty when the search fails.
    """
    _check_b(b)
    if g.n % 2:
        raise ValueError("odd [1,b]-factors need an even number of vertices")
    m = g.num_edges()
    if g.n > SEARCH_MAX_N and m > SEARCH_MAX_EDGES:
        raise ValueError(f"search limited to n <= {SEARCH_MAX_N} or |E| <= {SEARCH_MAX_EDGES}")
    n = g.n
    if n == 0:
        return FactorResult(True, factor=())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    rank = {v: i for i, v in enumerate(order)}
    forward = [[u for u in mask_to_list(g.adj[v]) if rank[u] > rank[v]] for v in order]
    deg = [0] * n
    # Unsettled edges still available to each vertex.
    slack = [g.degree(v) for v in range(n)]
    chosen: list[tuple[int, int]] = []

    def feasible(u: int) -> bool:
        d, free = deg[u], slack[u]
        if d > b:
            return False
        # Need some odd value in [max(d,1), min(d+free, b)].
        lo = max(d, 1)
        hi = min(d + free, b)
        if lo % 2 == 0:
            lo += 1
        return lo <= hi

    def settle(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        fw = forward[i]
        for u in fw:
            slack[u] -= 1
        slack[v] -= len(fw)
        for r in range(len(fw) + 1):
            total = deg[v] + r
            if total > b:
                break
            if total % 2 == 0:
                continue
            for pick in combinations(fw, r):
                for u in pick:
                    deg[u] += 1
                if all(feasible(u) for u in fw):
                    deg[v] = total
                    chosen.extend((min(u, v), max(u, v)) for u in pick)
                    if settle(i + 1):
                        return True
                    del chosen[len(chosen) - r:]
                    deg[v] = total - r
                for u in pick:
                    deg[u] -= 1
        for u in fw:
            slack[u] += 1
        slack[v] += len(fw)
        return False

    if not all(feasible(v) for v in range(n)):
        return FactorResult(False)
    if settle(0):
        return FactorResult(True, factor=tuple(sorted(chosen)))
    return FactorResult(False)
