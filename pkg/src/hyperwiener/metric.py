"""Shortest-path distances in hypergraphs.

A step moves between any two vertices of a common edge. Rows and tables
are numpy ``int64`` arrays with ``UNREACHABLE`` (-1) marking pairs in
different components; Wiener sums are returned as Python ints.
"""
from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Mapping, Sequence

import numpy as np

from .hypergraph import Disconnected, Hypergraph

UNREACHABLE = -1


class NotASubhypergraph(ValueError):
    pass


def bfs_from(H: Hypergraph, source: int) -> np.ndarray:
    """Distances from ``source`` to every vertex.

    Each edge is expanded at most once, so a row costs O(sum of edge sizes).
    """
    dist = np.full(H.vertex_count, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    used = bytearray(H.edge_count)
    edges, incidence = H.edges, H.incidence
    queue = deque([source])
    while queue:
        u = queue.popleft()
        nd = dist[u] + 1
        for j in incidence[u]:
            if used[j]:
                continue
            used[j] = 1
            for w in edges[j]:
                if dist[w] == UNREACHABLE:
                    dist[w] = nd
                    queue.append(w)
    return dist


def _bfs_lists(H: Hypergraph, source: int) -> list[int]:
    # plain-list variant of bfs_from; avoids numpy scalar overhead in hot loops
    dist = [UNREACHABLE] * H.vertex_count
    dist[source] = 0
    used = bytearray(H.edge_count)
    edges, incidence = H.edges, H.incidence
    queue = deque([source])
    while queue:
        u = queue.popleft()
        nd = dist[u] + 1
        for j in incidence[u]:
            if used[j]:
                continue
            used[j] = 1
            for w in edges[j]:
                if dist[w] == UNREACHABLE:
                    dist[w] = nd
                    queue.append(w)
    return dist


def distance(H: Hypergraph, u: int, v: int) -> int | float:
    """``d_H(u, v)``; ``math.inf`` when u and v lie in different components."""
    if u == v:
        return 0
    d = _bfs_lists(H, u)[v]
    return math.inf if d == UNREACHABLE else d


def distance_table(H: Hypergraph, sources: Iterable[int] | None = None) -> np.ndarray:
    """All-pairs table (or the rows for ``sources``, in order)."""
    if sources is None:
        sources = range(H.vertex_count)
    rows = [_bfs_lists(H, s) for s in sources]
    if not rows:
        return np.zeros((0, H.vertex_count), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def connected_table(H: Hypergraph) -> np.ndarray:
    """All-pairs table, raising :class:`Disconnected` if any pair is unreachable."""
    table = distance_table(H)
    if (table == UNREACHABLE).any():
        raise Disconnected("hypergraph is not connected")
    return table


def _row_sums(args: tuple[Hypergraph, Sequence[int]]) -> tuple[int, bool]:
    H, sources = args
    total = 0
    for s in sources:
        row = _bfs_lists(H, s)
        if UNREACHABLE in row:
            return 0, False
        total += sum(row)
    return total, True


def wiener_brute(H: Hypergraph, threads: int | None = None) -> int:
    """Wiener index as the sum of BFS distances over all unordered pairs.

    ``threads`` > 1 spreads the per-source BFS over worker processes.
    """
    n = H.vertex_count
    if threads is None or threads <= 1 or n < 2 * threads:
        total, ok = _row_sums((H, range(n)))
    else:
        chunks = [(H, range(i, n, threads)) for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_row_sums, chunks))
        ok = all(p[1] for p in parts)
        total = sum(p[0] for p in parts)
    if not ok:
        raise Disconnected("Wiener index undefined for a disconnected hypergraph")
    return total // 2


def wiener_from_table(table: np.ndarray) -> int:
    return int(table.sum(dtype=np.int64)) // 2


def _table_or_compute(H: Hypergraph, table: np.ndarray | None) -> np.ndarray:
    if table is None:
        return connected_table(H)
    if (table == UNREACHABLE).any():
        raise Disconnected("hypergraph is not connected")
    return table


def is_convex(H: Hypergraph, X: Iterable[int], table: np.ndarray | None = None) -> bool:
    """True iff every geodesic between two members of ``X`` stays inside ``X``."""
    D = _table_or_compute(H, table)
    members = np.fromiter(sorted(set(X)), dtype=np.int64)
    if len(members) <= 1:
        return True
    outside = np.ones(H.vertex_count, dtype=bool)
    outside[members] = False
    if not outside.any():
        return True
    DX = D[members]  # |X| x n
    for i, x in enumerate(members):
        # on_geodesic[j, z]: z lies on a shortest x - members[j] path
        on_geodesic = DX[i][None, :] + DX == DX[i, members][:, None]
        if (on_geodesic & outside[None, :]).any():
            return False
    return True


def closer_set(H: Hypergraph, x: int, y: int, table: np.ndarray | None = None) -> frozenset[int]:
    """``H(x, y)``: vertices strictly closer to ``x`` than to ``y``."""
    D = _table_or_compute(H, table)
    return frozenset(np.flatnonzero(D[x] < D[y]).tolist())


def is_isometric_subhypergraph(H: Hypergraph, sub: Hypergraph,
                               vertex_map: Mapping[int, int] | Sequence[int]) -> bool:
    """Whether ``sub``, placed in ``H`` through ``vertex_map``, preserves distances.

    ``vertex_map[i]`` is the vertex of ``H`` that vertex ``i`` of ``sub`` maps to.
    Distances are compared including unreachable pairs, so a disconnected
    ``sub`` is isometric only if the corresponding pairs are disconnected in ``H``.
    """
    image = [vertex_map[i] for i in range(sub.vertex_count)]
    if len(set(image)) != len(image):
        raise NotASubhypergraph("vertex map is not injective")
    if any(not 0 <= v < H.vertex_count for v in image):
        raise NotASubhypergraph("vertex map leaves the host vertex set")
    host_edges = set(H.edges)
    for i, e in enumerate(sub.edges):
        if frozenset(image[v] for v in e) not in host_edges:
            raise NotASubhypergraph(f"edge {i} of the subhypergraph is not a host edge")
    D_sub = distance_table(sub)
    D_host = distance_table(H, image)[:, image]
    return bool(np.array_equal(D_sub, D_host))
