"""Edge gates, the Theta relation, and partial cube-hypergraph recognition.

All functions take an optional precomputed all-pairs ``table`` (see
:func:`hyperwiener.metric.connected_table`); pass one when making many
calls on the same hypergraph.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import Disconnected, Hypergraph
from .metric import _table_or_compute, is_convex


class NotEdgeGated(ValueError):
    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class ThetaNotTransitive(ValueError):
    def __init__(self, message: str, witness: tuple[int, int, int]):
        super().__init__(message)
        self.witness = witness


class NotACut(ValueError):
    pass


def _gate(D: np.ndarray, x: int, edge: frozenset[int]) -> int | None:
    verts = list(edge)
    d = D[x, verts]
    j = int(np.argmin(d))
    others = np.delete(d, j)
    if (others == d[j] + 1).all():
        return verts[j]
    return None


def gate(H: Hypergraph, x: int, e: int, table: np.ndarray | None = None) -> int | None:
    """The vertex of edge ``e`` one step closer to ``x`` than all the others, if any."""
    D = _table_or_compute(H, table)
    return _gate(D, x, H.edges[e])


@dataclass
class EdgeGatedResult:
    ok: bool
    witness: tuple[int, int] | None = None  # (vertex, edge) without a gate

    def __bool__(self) -> bool:
        return self.ok


def is_edge_gated(H: Hypergraph, table: np.ndarray | None = None) -> EdgeGatedResult:
    D = _table_or_compute(H, table)
    for i, e in enumerate(H.edges):
        verts = sorted(e)
        sub = D[:, verts]  # n x |e|
        low = sub.min(axis=1)
        at_low = (sub == low[:, None]).sum(axis=1)
        one_up = (sub == low[:, None] + 1).sum(axis=1)
        bad = np.flatnonzero((at_low != 1) | (one_up != len(verts) - 1))
        if len(bad):
            return EdgeGatedResult(False, (int(bad[0]), i))
    return EdgeGatedResult(True)


@dataclass(frozen=True)
class EdgeVertexPartition:
    """The blocks ``H(a, e)`` for every vertex ``a`` of edge ``e``."""

    edge: int
    anchor_to_block: dict[int, frozenset[int]]

    @property
    def blocks(self) -> list[frozenset[int]]:
        return [self.anchor_to_block[a] for a in sorted(self.anchor_to_block)]

    def labels(self, vertex_count: int) -> np.ndarray:
        out = np.full(vertex_count, -1, dtype=np.int64)
        for a, block in self.anchor_to_block.items():
            out[list(block)] = a
        return out


def _partition_labels(D: np.ndarray, edge: frozenset[int], e: int) -> np.ndarray:
    verts = np.array(sorted(edge))
    sub = D[:, verts]
    low = sub.min(axis=1)
    at_low = (sub == low[:, None]).sum(axis=1)
    one_up = (sub == low[:, None] + 1).sum(axis=1)
    bad = np.flatnonzero((at_low != 1) | (one_up != len(verts) - 1))
    if len(bad):
        x = int(bad[0])
        raise NotEdgeGated(f"vertex {x} has no gate in edge {e}", (x, e))
    return verts[np.argmin(sub, axis=1)]


def edge_vertex_partition(H: Hypergraph, e: int,
                          table: np.ndarray | None = None) -> EdgeVertexPartition:
    """Assign every vertex to the block of its gate in edge ``e``."""
    D = _table_or_compute(H, table)
    labels = _partition_labels(D, H.edges[e], e)
    blocks = {int(a): frozenset(np.flatnonzero(labels == a).tolist()) for a in H.edges[e]}
    return EdgeVertexPartition(e, blocks)


def theta(H: Hypergraph, e: int, f: int, table: np.ndarray | None = None) -> bool:
    """``e Θ f``: edge ``f`` meets every block of the partition of ``e``."""
    D = _table_or_compute(H, table)
    labels = _partition_labels(D, H.edges[e], e)
    return {int(labels[v]) for v in H.edges[f]} == set(H.edges[e])


def _theta_matrix(H: Hypergraph, D: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Boolean Θ matrix and the per-edge gate-label rows."""
    m = H.edge_count
    labels = np.array([_partition_labels(D, e, i) for i, e in enumerate(H.edges)])
    rel = np.zeros((m, m), dtype=bool)
    for i, e in enumerate(H.edges):
        row = labels[i]
        need = len(e)
        for j, f in enumerate(H.edges):
            # f hits |e| distinct blocks iff it meets all of them
            rel[i, j] = len({int(row[v]) for v in f}) == need
    return rel, labels


def _classes(rel: np.ndarray) -> list[list[int]]:
    m = len(rel)
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sym = rel & rel.T
    for i, j in zip(*np.nonzero(np.triu(sym, 1))):
        a, b = find(int(i)), find(int(j))
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _transitivity_witness(rel: np.ndarray, classes: list[list[int]]) -> tuple[int, int, int] | None:
    sym = rel & rel.T
    for cls in classes:
        for a in cls:
            for b in cls:
                if sym[a, b]:
                    continue
                # shortest Θ-chain a -> b inside the class; the first member
                # not related to a gives a (a, prev, cur) triple
                prev = {a: a}
                queue = deque([a])
                while queue and b not in prev:
                    u = queue.popleft()
                    for w in cls:
                        if w not in prev and sym[u, w]:
                            prev[w] = u
                            queue.append(w)
                path = [b]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                path.reverse()
                for i in range(2, len(path)):
                    if not sym[a, path[i]]:
                        return (a, path[i - 1], path[i])
    return None


@dataclass
class ThetaClass:
    edges: list[int]
    components: list[frozenset[int]]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


@dataclass
class ThetaStructure:
    classes: list[ThetaClass]

    def class_of(self, e: int) -> int:
        for i, c in enumerate(self.classes):
            if e in c.edges:
                return i
        raise KeyError(e)

    def as_cut_partition(self):
        from .wiener import CutPartition
        return CutPartition(tuple(frozenset(c.edges) for c in self.classes))


def theta_structure(H: Hypergraph, table: np.ndarray | None = None) -> ThetaStructure:
    """Θ-classes with the components of ``H - F`` for every class ``F``.

    Requires ``H`` to be edge-gated with a transitive (and symmetric) Θ.
    """
    D = _table_or_compute(H, table)
    gated = is_edge_gated(H, D)
    if not gated:
        x, e = gated.witness
        raise NotEdgeGated(f"vertex {x} has no gate in edge {e}", gated.witness)
    rel, _ = _theta_matrix(H, D)
    classes = _classes(rel)
    witness = _transitivity_witness(rel, classes)
    if witness is not None:
        raise ThetaNotTransitive(
            "Θ is not transitive: e{} Θ e{} Θ e{} but not e{} Θ e{}".format(
                *witness, witness[0], witness[2]), witness)
    out = []
    for cls in classes:
        parts = H.remove_edges(cls).components()
        out.append(ThetaClass(cls, list(parts.blocks)))
    return ThetaStructure(out)


@dataclass
class RecognitionReport:
    uniform_k: int | None
    edge_gated: bool
    edge_gated_witness: tuple[int, int] | None = None
    # None when Θ could not be evaluated (input not edge-gated)
    theta_symmetric: bool | None = None
    theta_transitive: bool | None = None
    transitivity_witness: tuple[int, int, int] | None = None
    convexity_ok: bool | None = None
    structure: ThetaStructure | None = field(default=None, repr=False)

    @property
    def verdict(self) -> bool:
        return self.uniform_k is not None and self.edge_gated and bool(self.theta_transitive)

    @property
    def convexity_verdict(self) -> bool | None:
        if self.convexity_ok is None:
            return None
        return self.uniform_k is not None and self.edge_gated and self.convexity_ok

    @property
    def routes_agree(self) -> bool | None:
        cv = self.convexity_verdict
        return None if cv is None else cv == self.verdict

    @property
    def reason(self) -> str:
        if self.verdict:
            return "partial cube-hypergraph"
        reasons = []
        if self.uniform_k is None:
            reasons.append("not uniform")
        if not self.edge_gated:
            reasons.append("not edge-gated")
        elif not self.theta_transitive:
            reasons.append("theta not transitive")
        return ", ".join(reasons)

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "uniform_k": self.uniform_k,
            "edge_gated": self.edge_gated,
            "edge_gated_witness": self.edge_gated_witness,
            "theta_symmetric": self.theta_symmetric,
            "theta_transitive": self.theta_transitive,
            "transitivity_witness": self.transitivity_witness,
            "convexity_ok": self.convexity_ok,
            "routes_agree": self.routes_agree,
        }


def recognize(H: Hypergraph, validate_convexity: bool = False,
              table: np.ndarray | None = None) -> RecognitionReport:
    """Test whether ``H`` is a k-uniform partial cube-hypergraph.

    The verdict uses edge-gatedness plus transitivity of Θ. With
    ``validate_convexity`` the convexity of every block of every edge
    partition is also checked, giving an independent second verdict.
    """
    if not H.is_connected():
        raise Disconnected("recognition needs a connected hypergraph")
    D = _table_or_compute(H, table)
    report = RecognitionReport(uniform_k=H.uniformity(), edge_gated=False)
    gated = is_edge_gated(H, D)
    report.edge_gated = gated.ok
    report.edge_gated_witness = gated.witness
    if gated.ok:
        rel, labels = _theta_matrix(H, D)
        report.theta_symmetric = bool((rel == rel.T).all())
        classes = _classes(rel)
        report.transitivity_witness = _transitivity_witness(rel, classes)
        report.theta_transitive = report.theta_symmetric and report.transitivity_witness is None
        if validate_convexity:
            report.convexity_ok = all(
                is_convex(H, np.flatnonzero(labels[i] == a), D)
                for i, e in enumerate(H.edges) for a in e)
        if report.verdict:
            report.structure = ThetaStructure([
                ThetaClass(cls, list(H.remove_edges(cls).components().blocks))
                for cls in classes])
    elif validate_convexity:
        report.convexity_ok = False
    return report


def crossing_counts(H: Hypergraph, F: set[int] | frozenset[int],
                    source: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Distances from ``source`` plus the min and max number of ``F``-edges
    over all shortest paths to each vertex (dynamic programming over the
    shortest-path DAG)."""
    n = H.vertex_count
    dist = [-1] * n
    dist[source] = 0
    order = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for j in H.incidence[u]:
            for w in H.edges[j]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    order.append(w)
                    queue.append(w)
    big = n + 1
    lo = [big] * n
    hi = [-1] * n
    lo[source] = hi[source] = 0
    for u in order:
        du = dist[u]
        for j in H.incidence[u]:
            c = 1 if j in F else 0
            for w in H.edges[j]:
                if dist[w] == du + 1:
                    if lo[u] + c < lo[w]:
                        lo[w] = lo[u] + c
                    if hi[u] + c > hi[w]:
                        hi[w] = hi[u] + c
    return np.array(dist), np.array(lo), np.array(hi)


def verify_single_crossing(H: Hypergraph, F) -> bool:
    """Whether every shortest path between vertices in different components
    of ``H - F`` uses exactly one edge of ``F``."""
    F = frozenset(F)
    parts = H.remove_edges(F).components()
    if len(parts) < 2:
        raise NotACut("removing the edge set leaves the hypergraph connected")
    if not H.is_connected():
        raise Disconnected("hypergraph is not connected")
    block_of = np.array(parts.block_of)
    for u in range(H.vertex_count):
        _, lo, hi = crossing_counts(H, F, u)
        across = block_of != block_of[u]
        if not ((lo[across] == 1) & (hi[across] == 1)).all():
            return False
    return True
