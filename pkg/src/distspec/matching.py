"""Maximum cardinality matching (Edmonds' blossom algorithm) and the
Tutte-Berge deficiency by exhaustive subset search."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graphs import Graph, mask_to_list, reach

SUBSET_CAP = 24
_TABLE_MAX_N = 16


def _mates(n: int, adj: Sequence[int]) -> list[int]:
    nbrs = [mask_to_list(a) for a in adj]
    match = [-1] * n
    # Greedy start; the augmenting phase fixes anything it misses.
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    for root in range(n):
        if match[root] != -1 or not nbrs[root]:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])
        end = -1
        while queue and end < 0:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle: contract the blossom through the common base.
                    cur = _lca(base, match, parent, v, to)
                    in_blossom = [False] * n
                    _mark(base, match, parent, in_blossom, v, cur, to)
                    _mark(base, match, parent, in_blossom, to, cur, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        end = to
                        break
                    used[match[to]] = True
                    queue.append(match[to])
        v = end
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return match


def _lca(base, match, parent, a, b) -> int:
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _mark(base, match, parent, in_blossom, v, b, child) -> None:
    while base[v] != b:
        in_blossom[base[v]] = in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Edges of a maximum matching, each as ``(u, v)`` with ``u < v``."""
    match = _mates(g.n, g.adj)
    return [(v, u) for v, u in enumerate(match) if v < u]


def matching_number(g: Graph) -> int:
    return sum(1 for m in _mates(g.n, g.adj) if m != -1) // 2


def alpha_from_adj(n: int, adj: Sequence[int]) -> int:
    return sum(1 for m in _mates(n, adj) if m != -1) // 2


def is_matching(g: Graph, edges: Sequence[tuple[int, int]]) -> bool:
    used = 0
    for u, v in edges:
        if not g.has_edge(u, v) or used >> u & 1 or used >> v & 1:
            return False
        used |= 1 << u | 1 << v
    return True


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def odd_count_table(n: int, adj: Sequence[int]) -> list[int]:
    """``table[U]`` = number of odd components of the subgraph induced by ``U``.

    Filled in increasing ``U``: peel off the component of the lowest vertex,
    whose complement in ``U`` is a smaller mask.
    """
    size = 1 << n
    table = [0] * size
    for U in range(1, size):
        comp = reach(adj, U & -U, U)
        table[U] = (comp.bit_count() & 1) + table[U ^ comp]
    return table


def odd_count(adj: Sequence[int], U: int) -> int:
    odd = 0
    while U:
        comp = reach(adj, U & -U, U)
        odd += comp.bit_count() & 1
        U ^= comp
    return odd


def berge_tutte(g: Graph) -> tuple[int, int]:
    """``max_S (o(G-S) - |S|)`` over all vertex subsets and the smallest maximizing bitmask.

    The matching number is ``(n - deficiency) / 2``.
    """
    if g.n > SUBSET_CAP:
        raise ValueError(f"subset enumeration capped at n={SUBSET_CAP}, got n={g.n}")
    return deficiency_from_adj(g.n, g.adj)


def deficiency_from_adj(n: int, adj: Sequence[int]) -> tuple[int, int]:
    full = (1 << n) - 1
    best, witness = -1, 0
    if n <= _TABLE_MAX_N:
        table = odd_count_table(n, adj)
        for S in range(1 << n):
            val = table[full ^ S] - S.bit_count()
            if val > best:
                best, witness = val, S
    else:
        for S in range(1 << n):
            val = odd_count(adj, full ^ S) - S.bit_count()
            if val > best:
                best, witness = val, S
    return best, witness


def normalize_witness(g: Graph, S: int) -> int:
    """Grow a Berge witness until every component of ``G - S`` is odd.

    Moves the lowest vertex of some even component into ``S`` until none is
    left; for a maximizing ``S`` the value ``o(G-S) - |S|`` is unchanged.
    """
    full = g.full_mask
    while True:
        rest = full & ~S
        moved = False
        while rest:
            comp = reach(g.adj, rest & -rest, rest)
            if comp.bit_count() % 2 == 0:
                S |= comp & -comp
                moved = True
                break
            rest ^= comp
        if not moved:
            return S
