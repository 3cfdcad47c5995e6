"""Immutable finite hypergraphs on dense integer vertex ids."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class HypergraphError(ValueError):
    """Base class for invalid hypergraph input."""

    def __init__(self, message: str, edge_index: int | None = None):
        super().__init__(message)
        self.edge_index = edge_index
        self.line: int | None = None


class EmptyEdge(HypergraphError):
    pass


class OutOfRangeVertex(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class EdgeTooSmall(HypergraphError):
    pass


class UnknownEdgeId(HypergraphError, KeyError):
    pass


class Disconnected(ValueError):
    """Raised where an operation is only defined on connected hypergraphs."""


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class Hypergraph:
    """A validated hypergraph.

    ``edges`` keeps the input order, which is the canonical edge id order.
    ``incidence[v]`` lists the ids of the edges containing ``v``.
    Instances are immutable; use :func:`build` to construct them.
    """

    vertex_count: int
    edges: tuple[frozenset[int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_sizes(self) -> list[int]:
        return [len(e) for e in self.edges]

    def uniformity(self) -> int | None:
        """Common edge size, or None when sizes differ (or there are no edges)."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def is_linear(self) -> bool:
        # two edges sharing >= 2 vertices both appear in the incidence lists
        # of each shared vertex, so one pass over pairs per vertex suffices
        seen: set[tuple[int, int]] = set()
        for inc in self.incidence:
            for i, a in enumerate(inc):
                for b in inc[i + 1:]:
                    if (a, b) in seen:
                        return False
                    seen.add((a, b))
        return True

    def remove_edges(self, removed: Iterable[int]) -> Hypergraph:
        removed = set(removed)
        unknown = [i for i in removed if not 0 <= i < len(self.edges)]
        if unknown:
            raise UnknownEdgeId(f"unknown edge ids: {sorted(unknown)}")
        kept = [e for i, e in enumerate(self.edges) if i not in removed]
        return _from_valid(self.vertex_count, kept)

    def components(self) -> ComponentPartition:
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            it = iter(e)
            root = find(next(it))
            for v in it:
                r = find(v)
                if r != root:
                    parent[r] = root
        index: dict[int, int] = {}
        block_of = []
        members: list[set[int]] = []
        for v in range(self.vertex_count):
            r = find(v)
            if r not in index:
                index[r] = len(members)
                members.append(set())
            members[index[r]].add(v)
            block_of.append(index[r])
        return ComponentPartition(tuple(frozenset(m) for m in members), tuple(block_of))

    def component_labels(self, removed: Iterable[int] = ()) -> np.ndarray:
        """Component index of every vertex of ``H - removed``.

        Same numbering as :meth:`components` (blocks ordered by smallest
        vertex) without building the reduced hypergraph.
        """
        n = self.vertex_count
        skip = bytearray(len(self.edges))
        for j in removed:
            skip[j] = 1
        edges, incidence = self.edges, self.incidence
        labels = [-1] * n
        count = 0
        for root in range(n):
            if labels[root] >= 0:
                continue
            labels[root] = count
            stack = [root]
            while stack:
                u = stack.pop()
                for j in incidence[u]:
                    if skip[j]:
                        continue
                    skip[j] = 1
                    for w in edges[j]:
                        if labels[w] < 0:
                            labels[w] = count
                            stack.append(w)
            count += 1
        return np.array(labels, dtype=np.int64)

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def sorted_edges(self) -> list[list[int]]:
        return [sorted(e) for e in self.edges]


def _from_valid(vertex_count: int, edges: Sequence[frozenset[int]]) -> Hypergraph:
    incidence: list[list[int]] = [[] for _ in range(vertex_count)]
    for i, e in enumerate(edges):
        for v in e:
            incidence[v].append(i)
    return Hypergraph(vertex_count, tuple(edges), tuple(tuple(x) for x in incidence))


def build(vertex_count: int, edges: Iterable[Iterable[int]],
          allow_singleton_edges: bool = False) -> Hypergraph:
    """Validate ``edges`` over vertices ``0..vertex_count-1`` and build a Hypergraph.

    Repeated vertices inside one edge are collapsed with a warning. Edges of
    size one are rejected unless ``allow_singleton_edges`` is set, in which
    case they are dropped with a warning.
    """
    if vertex_count < 0:
        raise HypergraphError(f"negative vertex count {vertex_count}")
    result: list[frozenset[int]] = []
    seen: dict[frozenset[int], int] = {}
    for i, raw in enumerate(edges):
        raw = list(raw)
        if not raw:
            raise EmptyEdge(f"edge {i} is empty", i)
        for v in raw:
            if not 0 <= v < vertex_count:
                raise OutOfRangeVertex(
                    f"edge {i}: vertex {v} outside [0, {vertex_count})", i)
        e = frozenset(raw)
        if len(e) != len(raw):
            warnings.warn(f"edge {i} lists a vertex more than once; deduplicated",
                          stacklevel=2)
        if len(e) < 2:
            if allow_singleton_edges:
                warnings.warn(f"dropping singleton edge {i}", stacklevel=2)
                continue
            raise EdgeTooSmall(f"edge {i} has a single vertex", i)
        if e in seen:
            raise DuplicateEdge(f"edge {i} duplicates edge {seen[e]}", i)
        seen[e] = i
        result.append(e)
    return _from_valid(vertex_count, result)
