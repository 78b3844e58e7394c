"""Undirected simple graphs stored as per-vertex neighbour bitsets.

Vertices are ``0..n-1``; a vertex set is an ``int`` bitmask.  Graphs are
immutable and all operations return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    # Recorded block partition (bitmasks) for the constructed families.
    blocks: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the vertex range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            w = nb
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                w ^= low
        if self.blocks is not None:
            seen = 0
            for blk in self.blocks:
                if blk & seen or not blk:
                    raise ValueError("blocks must be nonempty and disjoint")
                seen |= blk
            if seen != full:
                raise ValueError("blocks must cover every vertex")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...], blocks=None) -> "Graph":
        # Skips validation; for hot loops that build adjacency correctly by construction.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "blocks", blocks)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            w = self.adj[u] >> (u + 1)
            v = u + 1
            while w:
                if w & 1:
                    out.append((u, v))
                w >>= 1
                v += 1
        return out

    def block_lists(self) -> list[list[int]] | None:
        if self.blocks is None:
            return None
        return [mask_to_list(b) for b in self.blocks]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def list_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# -- constructions ---------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    if n > MAX_VERTICES:
        raise ValueError(f"n={n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise ValueError(f"bad vertex count {n}")
    return Graph._trusted(n, (0,) * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return join(complete(1), empty(leaves))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ValueError(f"union has {n} vertices, more than {MAX_VERTICES}")
    return Graph._trusted(n, g1.adj + tuple(nb << g1.n for nb in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    u = disjoint_union(g1, g2)
    left = g1.full_mask
    right = g2.full_mask << g1.n
    adj = tuple(nb | right if v < g1.n else nb | left for v, nb in enumerate(u.adj))
    return Graph._trusted(u.n, adj)


def union_all(graphs: Sequence[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def _with_blocks(g: Graph, sizes: Sequence[int]) -> Graph:
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(((1 << size) - 1) << start)
        start += size
    return Graph(g.n, g.adj, tuple(blocks))


def join_of_cliques(s: int, sizes: Sequence[int]) -> Graph:
    """``K_s`` joined to the disjoint union of cliques of the given orders.

    Blocks: the ``K_s`` vertices, then one block per clique.
    """
    if s < 0 or any(c < 1 for c in sizes):
        raise ValueError("clique orders must be positive and s nonnegative")
    rest = union_all([complete(c) for c in sizes])
    g = join(complete(s), rest) if s else rest
    return _with_blocks(g, [s, *sizes] if s else list(sizes))


def check_matching_params(n: int, s: int, k: int, parity: bool = True) -> None:
    if not 2 <= k <= n - 2:
        raise ValueError(f"need 2 <= k <= n-2, got k={k}, n={n}")
    if parity and (n - k) % 2:
        raise ValueError(f"need n = k (mod 2), got n={n}, k={k}")
    if s < 1 or n + 1 - 2 * s - k < 1:
        raise ValueError(f"need s >= 1 and n+1-2s-k >= 1, got s={s}")


def family_matching(n: int, s: int, k: int, parity: bool = True) -> Graph:
    """``K_s v (K_{n+1-2s-k} + (s+k-1)K_1)``; blocks: join, clique, independent.

    ``parity=False`` drops the ``n = k (mod 2)`` requirement, which the
    construction itself does not need.
    """
    check_matching_params(n, s, k, parity)
    big = n + 1 - 2 * s - k
    small = s + k - 1
    g = join_of_cliques(s, [big] + [1] * small)
    return _with_blocks(g, [s, big, small])


def family_odd_factor(n: int, s: int, b: int) -> Graph:
    """``K_s v (K_{n-(b+1)s-1} + (bs+1)K_1)``; blocks: join, clique, independent."""
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be a positive odd integer, got {b}")
    if n % 2:
        raise ValueError(f"n must be even, got {n}")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    big = n - (b + 1) * s - 1
    if big < 1:
        raise ValueError(f"clique block n-(b+1)s-1 = {big} is empty")
    g = join_of_cliques(s, [big] + [1] * (b * s + 1))
    return _with_blocks(g, [s, big, b * s + 1])


def family_case3(n: int, s: int, b: int, delta: int) -> Graph:
    """``K_s v (K_{n1} + (bs+1)K_{delta+1-s})`` with ``n1 = n-s-(delta+1-s)(bs+1)``.

    The recorded partition collapses all small cliques into one class.
    """
    if not 1 <= s < delta:
        raise ValueError(f"need 1 <= s < delta, got s={s}, delta={delta}")
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be a positive odd integer, got {b}")
    p = delta + 1 - s
    copies = b * s + 1
    big = n - s - p * copies
    if big < 2 * p:
        raise ValueError(f"big clique order {big} below 2(delta-s+1) = {2 * p}")
    g = join_of_cliques(s, [big] + [p] * copies)
    return _with_blocks(g, [s, big, p * copies])


# -- deletions -------------------------------------------------------------


def delete_vertices(g: Graph, S: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``V \\ S`` plus the map new index -> old index."""
    keep = mask_to_list(g.full_mask & ~S)
    pos = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        nb = 0
        for u in mask_to_list(g.adj[old] & ~S):
            nb |= 1 << pos[u]
        adj.append(nb)
    return Graph._trusted(len(keep), tuple(adj)), keep


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(adj), g.blocks)


# -- structure -------------------------------------------------------------


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from the ``start`` bitmask inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph, S: int = 0) -> list[int]:
    """Connected components of ``g - S`` as bitmasks, ordered by lowest vertex."""
    rest = g.full_mask & ~S
    out = []
    while rest:
        comp = reach(g.adj, rest & -rest, rest)
        out.append(comp)
        rest &= ~comp
    return out


def odd_components(g: Graph, S: int = 0) -> tuple[int, int]:
    comps = components(g, S)
    return sum(c.bit_count() & 1 for c in comps), len(comps)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return reach(g.adj, 1, g.full_mask) == g.full_mask


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def _local_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Internally vertex-disjoint s-t paths (s, t non-adjacent), capped at ``cutoff``.

    Unit-capacity max flow on the split graph: node ``2v`` is v_in, ``2v+1`` v_out.
    """
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, c: int, w: int) -> None:
        if (a, c) not in cap:
            out[a].append(c)
            out[c].append(a)
            cap[(c, a)] = cap.get((c, a), 0)
        cap[(a, c)] = cap.get((a, c), 0) + w

    big = n
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in mask_to_list(g.adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: -1}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for c in out[a]:
                if c not in parent and cap[(a, c)] > 0:
                    parent[c] = a
                    queue.append(c)
        if sink not in parent:
            break
        c = sink
        while c != source:
            a = parent[c]
            cap[(a, c)] -= 1
            cap[(c, a)] += 1
            c = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity via vertex-split max flow; ``K_n`` gives ``n-1``.

    Disconnected (or empty) graphs give 0.
    """
    if g.n == 0 or not is_connected(g):
        return 0
    full = g.full_mask
    best = g.n - 1
    # Any minimum cut misses one of v_0..v_kappa; scanning pairs (i, j>i)
    # for i up to the current best is enough.
    for i in range(g.n):
        if i > best:
            break
        non_nb = full & ~g.adj[i] & ~((1 << (i + 1)) - 1)
        for j in mask_to_list(non_nb):
            best = min(best, _local_connectivity(g, i, j, best))
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects ``g`` (or leaves one vertex).

    Subsets are tried by increasing size, so cost is about C(n, kappa).
    """
    if g.n == 0 or not is_connected(g):
        return 0
    for r in range(g.n - 1):
        for S in combinations(range(g.n), r):
            mask = list_to_mask(S)
            rest = g.full_mask & ~mask
            if reach(g.adj, rest & -rest, rest) != rest:
                return r
    return g.n - 1


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test, adequate for the small graphs used here."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gd, hd = g.degrees(), h.degrees()
    order = sorted(range(n), key=lambda v: -gd[v])
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or hd[w] != gd[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (g.adj[v] >> u & 1) != (h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(i + 1):
                    return True
                used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for u, v in g.edges():
        adj[perm[u]] |= 1 << perm[v]
        adj[perm[v]] |= 1 << perm[u]
    return Graph._trusted(g.n, tuple(adj))


def all_relabelings(g: Graph) -> Iterator[Graph]:
    for perm in permutations(range(g.n)):
        yield relabel(g, perm)
