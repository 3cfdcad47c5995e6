"""Wiener index by cut decomposition.

Three entry points:

* :func:`wiener_cut` for k-uniform partial cube-hypergraphs, summing over
  Θ-classes;
* :func:`wiener_hypertree` for (possibly non-uniform) linear hypertrees,
  summing over single edges;
* :func:`wiener_general` for any connected hypergraph with a user-supplied
  partition of the edges into cuts, adding the distances of vertex pairs
  that no cut separates.

Every result is a :class:`WienerBreakdown` whose parts add up to the total.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .hypergraph import Disconnected, Hypergraph
from .metric import UNREACHABLE, connected_table, is_convex
from .structure import RecognitionReport, crossing_counts, recognize

DEFAULT_VALIDATION_LIMIT = 512


class NotPartialCube(ValueError):
    def __init__(self, report: RecognitionReport):
        super().__init__(f"not a partial cube-hypergraph: {report.reason}")
        self.report = report


class NotAHypertree(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPartition(ValueError):
    pass


class CutEdgesIntersect(ValueError):
    def __init__(self, message: str, cut: int, edges: tuple[int, int]):
        super().__init__(message)
        self.cut = cut
        self.edges = edges


class InvalidCutPartition(ValueError):
    def __init__(self, report: CutValidationReport):
        super().__init__(f"cut partition fails validation: {report.failures()}")
        self.report = report


class ValidationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CutPartition:
    cuts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, cuts: Iterable[Iterable[int]]) -> CutPartition:
        return cls(tuple(frozenset(c) for c in cuts))

    @classmethod
    def singletons(cls, H: Hypergraph) -> CutPartition:
        return cls(tuple(frozenset([i]) for i in range(H.edge_count)))

    def __len__(self) -> int:
        return len(self.cuts)

    def check(self, H: Hypergraph) -> None:
        """Raise unless the cuts partition the edge ids of ``H`` into
        non-empty sets of pairwise vertex-disjoint edges."""
        seen: dict[int, int] = {}
        for i, cut in enumerate(self.cuts):
            if not cut:
                raise NotAPartition(f"cut {i} is empty")
            for e in cut:
                if not 0 <= e < H.edge_count:
                    raise NotAPartition(f"cut {i}: unknown edge id {e}")
                if e in seen:
                    raise NotAPartition(f"edge {e} appears in cuts {seen[e]} and {i}")
                seen[e] = i
        missing = sorted(set(range(H.edge_count)) - set(seen))
        if missing:
            raise NotAPartition(f"edges not covered by any cut: {missing}")
        for i, cut in enumerate(self.cuts):
            pair = _intersecting_pair(H, cut)
            if pair is not None:
                raise CutEdgesIntersect(
                    f"cut {i}: edges {pair[0]} and {pair[1]} share a vertex", i, pair)


def _intersecting_pair(H: Hypergraph, cut: Iterable[int]) -> tuple[int, int] | None:
    owner: dict[int, int] = {}
    for e in sorted(cut):
        for v in H.edges[e]:
            if v in owner:
                return owner[v], e
            owner[v] = e
    return None


def cut_contribution(sizes: Sequence[int]) -> int:
    """Sum of ``a * b`` over unordered pairs of component sizes."""
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


@dataclass
class CutTerm:
    index: int
    edges: list[int]
    sizes: list[int]
    contribution: int


@dataclass
class WienerBreakdown:
    total: int
    method: str
    per_cut: list[CutTerm] = field(default_factory=list)
    residual: int = 0
    residual_pairs: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        parts = sum(t.contribution for t in self.per_cut) + self.residual
        if self.per_cut and parts != self.total:
            raise AssertionError(f"breakdown parts {parts} != total {self.total}")

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "method": self.method,
            "per_cut": [
                {"index": t.index, "edges": t.edges, "sizes": t.sizes,
                 "contribution": t.contribution} for t in self.per_cut],
            "residual": self.residual,
            "residual_pairs": [list(p) for p in self.residual_pairs],
        }


def _from_cuts(H: Hypergraph, cuts: Sequence[Iterable[int]], method: str,
               labels: np.ndarray | None = None) -> WienerBreakdown:
    if labels is None:
        labels = _labels(H, cuts)
    terms = []
    for i, cut in enumerate(cuts):
        sizes = np.bincount(labels[i]).tolist()
        terms.append(CutTerm(i, sorted(cut), sizes, cut_contribution(sizes)))
    return WienerBreakdown(sum(t.contribution for t in terms), method, terms)


def wiener_cut(H: Hypergraph) -> WienerBreakdown:
    """Wiener index of a k-uniform partial cube-hypergraph from its Θ-classes."""
    report = recognize(H)
    if not report.verdict:
        raise NotPartialCube(report)
    classes = [c.edges for c in report.structure.classes]
    return _from_cuts(H, classes, "cut")


def acyclicity_check(H: Hypergraph) -> tuple[bool, list[int] | None]:
    """Look for a cycle ``u0, e1, u1, ..., es, u0`` with distinct edges and
    distinct vertices (s >= 2).

    Such cycles are exactly the cycles of the vertex-edge incidence graph, so
    a DFS over that bipartite graph decides the question. The witness
    alternates vertex and edge ids and repeats ``u0`` at the end.
    """
    n = H.vertex_count
    # incidence graph nodes: vertices 0..n-1, edge j -> n + j
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in range(n):
        if root in depth:
            continue
        depth[root] = 0
        parent[root] = -1
        stack = [root]
        while stack:
            node = stack.pop()
            if node < n:
                nbrs = [n + j for j in H.incidence[node]]
            else:
                nbrs = list(H.edges[node - n])
            for w in nbrs:
                if w == parent[node]:
                    continue
                if w in depth:
                    return False, _cycle_witness(node, w, parent, depth, n)
                depth[w] = depth[node] + 1
                parent[w] = node
                stack.append(w)
    return True, None


def _cycle_witness(a: int, b: int, parent: dict[int, int], depth: dict[int, int],
                   n: int) -> list[int]:
    left, right = [a], [b]
    while left[-1] != right[-1]:
        if depth[left[-1]] >= depth[right[-1]]:
            left.append(parent[left[-1]])
        else:
            right.append(parent[right[-1]])
    cycle = left + right[-2::-1]
    # rotate so the sequence starts at a vertex
    if cycle[0] >= n:
        cycle = cycle[1:] + cycle[:1]
    cycle.append(cycle[0])
    return [c if c < n else c - n for c in cycle]


def check_hypertree(T: Hypergraph) -> None:
    if not T.is_connected():
        raise NotAHypertree("hypertree must be connected")
    if not T.is_linear():
        raise NotAHypertree("hypertree must be linear")
    ok, witness = acyclicity_check(T)
    if not ok:
        raise NotAHypertree(f"cycle found: {witness}", witness)


def wiener_hypertree(T: Hypergraph) -> WienerBreakdown:
    """Wiener index of a linear hypertree, one term per edge."""
    check_hypertree(T)
    return _from_cuts(T, [[i] for i in range(T.edge_count)], "tree")


@dataclass
class CutCheck:
    index: int
    pairwise_disjoint: bool
    disconnects: bool
    components_convex: bool
    single_crossing: bool

    @property
    def ok(self) -> bool:
        return (self.pairwise_disjoint and self.disconnects
                and self.components_convex and self.single_crossing)


@dataclass
class CutValidationReport:
    cuts: list[CutCheck]
    coverage_identity: bool
    unseparated_pairs: list[tuple[int, int, int]]
    coverage_violations: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def method_valid(self) -> bool:
        return self.coverage_identity and all(c.ok for c in self.cuts)

    def failures(self) -> list[str]:
        out = []
        for c in self.cuts:
            for flag in ("pairwise_disjoint", "disconnects", "components_convex",
                         "single_crossing"):
                if not getattr(c, flag):
                    out.append(f"cut {c.index}: {flag}")
        if not self.coverage_identity:
            out.append(f"coverage identity fails on {len(self.coverage_violations)} pairs")
        return out

    def as_dict(self) -> dict:
        return {
            "method_valid": self.method_valid,
            "coverage_identity": self.coverage_identity,
            "cuts": [
                {"index": c.index, "pairwise_disjoint": c.pairwise_disjoint,
                 "disconnects": c.disconnects, "components_convex": c.components_convex,
                 "single_crossing": c.single_crossing} for c in self.cuts],
            "unseparated_pairs": [list(p) for p in self.unseparated_pairs],
        }


def _labels(H: Hypergraph, cuts: Sequence[Iterable[int]]) -> np.ndarray:
    """Row ``i``: component index of every vertex of ``H - cuts[i]``."""
    if not cuts:
        return np.zeros((0, H.vertex_count), dtype=np.int64)
    return np.stack([H.component_labels(c) for c in cuts])


def validate_cut_partition(H: Hypergraph, C: CutPartition,
                           max_vertices: int = DEFAULT_VALIDATION_LIMIT,
                           force: bool = False) -> CutValidationReport:
    """Check exhaustively that ``C`` supports the cut method on ``H``.

    Per cut: it disconnects ``H``, every component is convex, and every
    shortest path between separated vertices crosses the cut exactly once.
    Globally: each pair separated by some cut is at distance equal to the
    number of cuts separating it. Inputs above ``max_vertices`` are refused
    unless ``force`` is set.
    """
    if H.vertex_count > max_vertices and not force:
        raise ValidationTooLarge(
            f"{H.vertex_count} vertices exceeds the validation limit {max_vertices}")
    C.check(H)
    D = connected_table(H)
    labels = _labels(H, C.cuts)
    n = H.vertex_count
    checks = []
    for i, cut in enumerate(C.cuts):
        row = labels[i]
        parts = int(row.max()) + 1 if n else 0
        disconnects = parts >= 2
        convex = all(is_convex(H, np.flatnonzero(row == b), D) for b in range(parts))
        single = disconnects
        if disconnects:
            for u in range(n):
                _, lo, hi = crossing_counts(H, cut, u)
                across = row != row[u]
                if not ((lo[across] == 1) & (hi[across] == 1)).all():
                    single = False
                    break
        checks.append(CutCheck(i, True, disconnects, convex, single))

    separating = np.zeros((n, n), dtype=np.int64)
    for row in labels:
        separating += row[:, None] != row[None, :]
    iu, ju = np.triu_indices(n, 1)
    sep = separating[iu, ju]
    dist = D[iu, ju]
    bad = np.flatnonzero((sep > 0) & (sep != dist))
    violations = [(int(iu[k]), int(ju[k]), int(dist[k]), int(sep[k])) for k in bad]
    unsep = np.flatnonzero(sep == 0)
    unseparated = [(int(iu[k]), int(ju[k]), int(dist[k])) for k in unsep]
    return CutValidationReport(checks, not violations, unseparated, violations)


def _group_distances(H: Hypergraph, group: list[int]) -> list[tuple[int, int, int]]:
    # BFS from each member, stopping once the remaining members are reached
    out = []
    for i, u in enumerate(group[:-1]):
        targets = set(group[i + 1:])
        dist = {u: 0}
        queue = deque([u])
        while queue and targets:
            x = queue.popleft()
            for j in H.incidence[x]:
                for w in H.edges[j]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        queue.append(w)
                        targets.discard(w)
        for v in group[i + 1:]:
            if v not in dist:
                raise Disconnected("hypergraph is not connected")
            out.append((u, v, dist[v]) if u < v else (v, u, dist[v]))
    return out


def wiener_general(H: Hypergraph, C: CutPartition, prevalidated: bool = False,
                   max_vertices: int = DEFAULT_VALIDATION_LIMIT) -> WienerBreakdown:
    """Wiener index from an explicit cut partition plus residual pair distances.

    Unless ``prevalidated``, :func:`validate_cut_partition` runs first and an
    :class:`InvalidCutPartition` is raised when the partition does not
    support the method.
    """
    if not prevalidated:
        report = validate_cut_partition(H, C, max_vertices=max_vertices)
        if not report.method_valid:
            raise InvalidCutPartition(report)
    elif not H.is_connected():
        raise Disconnected("Wiener index undefined for a disconnected hypergraph")
    labels = _labels(H, C.cuts)
    result = _from_cuts(H, C.cuts, "general", labels)
    # vertices with identical label columns are separated by no cut
    _, group_of, counts = np.unique(labels.T, axis=0, return_inverse=True,
                                    return_counts=True)
    group_of = group_of.ravel()
    pairs: list[tuple[int, int, int]] = []
    for g in np.flatnonzero(counts > 1):
        pairs.extend(_group_distances(H, np.flatnonzero(group_of == g).tolist()))
    pairs.sort()
    residual = sum(p[2] for p in pairs)
    return WienerBreakdown(result.total + residual, "general", result.per_cut,
                           residual, pairs)


__all__ = [
    "CutPartition", "CutValidationReport", "CutCheck", "CutTerm", "WienerBreakdown",
    "NotPartialCube", "NotAHypertree", "NotAPartition", "CutEdgesIntersect",
    "InvalidCutPartition", "ValidationTooLarge", "UNREACHABLE",
    "cut_contribution", "wiener_cut", "wiener_hypertree", "wiener_general",
    "validate_cut_partition", "acyclicity_check", "check_hypertree",
]
