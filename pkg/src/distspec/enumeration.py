"""Labeled graph enumeration by edge mask.

Bit ``e`` of the mask is the ``e``-th pair in graph6 order
``(0,1), (0,2), (1,2), (0,3), ...``, so the mask ordering matches the
graph6 bit stream.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .graphs import Graph, is_connected, reach

MAX_ENUM_N = 8
_CHUNK = 7


def edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def edge_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: e for e, pair in enumerate(edge_pairs(n))}


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple[int, int, tuple[tuple[int, ...], ...]], ...]:
    # Adjacency contribution of every sub-mask of each 7-bit chunk of the edge mask.
    pairs = edge_pairs(n)
    out = []
    for start in range(0, len(pairs), _CHUNK):
        chunk = pairs[start:start + _CHUNK]
        table = []
        for sub in range(1 << len(chunk)):
            adj = [0] * n
            for e, (i, j) in enumerate(chunk):
                if sub >> e & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            table.append(tuple(adj))
        out.append((start, (1 << len(chunk)) - 1, tuple(table)))
    return tuple(out)


def adjacency_from_mask(n: int, mask: int) -> tuple[int, ...]:
    tables = _tables(n)
    if not tables:
        return (0,) * n
    adj = tables[0][2][mask & tables[0][1]]
    for start, width, table in tables[1:]:
        part = table[(mask >> start) & width]
        adj = tuple(a | b for a, b in zip(adj, part))
    return adj


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph._trusted(n, adjacency_from_mask(n, mask))


def mask_of(g: Graph) -> int:
    idx = edge_index(g.n)
    mask = 0
    for e in g.edges():
        mask |= 1 << idx[e]
    return mask


def num_masks(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def iter_masks(n: int, connected: bool = False, start: int = 0,
               stop: int | None = None) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(mask, adjacency)`` for masks in ``[start, stop)`` in ascending order."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    total = num_masks(n)
    stop = total if stop is None else min(stop, total)
    full = (1 << n) - 1
    for mask in range(start, stop):
        adj = adjacency_from_mask(n, mask)
        if connected and reach(adj, 1, full) != full:
            continue
        yield mask, adj


def enumerate_labeled_graphs(n: int, filter: Callable[[Graph], bool] | None = None,
                             start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices passing ``filter``, once each,
    in ascending edge-mask order.  ``start``/``stop`` select a mask stripe."""
    for _, adj in iter_masks(n, start=start, stop=stop):
        g = Graph._trusted(n, adj)
        if filter is None or filter(g):
            yield g


def connected_graphs(n: int) -> Iterator[Graph]:
    return enumerate_labeled_graphs(n, is_connected)


def stripes(n: int, parts: int) -> list[tuple[int, int]]:
    total = num_masks(n)
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(a, min(a + step, total)) for a in range(0, total, step)]
