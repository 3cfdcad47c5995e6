"""Constructors for the hypergraph families used throughout the package."""
from __future__ import annotations

import itertools
from importlib import resources

import numpy as np

from .hypergraph import Hypergraph, build


class BadParameter(ValueError):
    pass


def single_edge(k: int) -> Hypergraph:
    """``k`` vertices and one edge containing all of them."""
    if k < 2:
        raise BadParameter(f"edge size must be at least 2, got {k}")
    return build(k, [range(k)])


def cartesian_product(H: Hypergraph, G: Hypergraph) -> Hypergraph:
    """``H □ G`` with vertex ``(u, u')`` numbered ``u * |V(G)| + u'``.

    Edges ``{u} x e'`` come first (by ``u``, then ``e'``), followed by
    ``e x {u'}`` (by ``e``, then ``u'``).
    """
    m = G.vertex_count
    edges = [[u * m + w for w in f] for u in range(H.vertex_count) for f in G.edges]
    edges += [[u * m + w for u in e] for e in H.edges for w in range(m)]
    return build(H.vertex_count * m, edges)


def cube(k: int, n: int) -> tuple[Hypergraph, list[tuple[int, ...]]]:
    """The k-uniform n-cube and the coordinate tuple of every vertex.

    Vertex ids follow row-major order of the tuples in ``{0..k-1}^n``;
    each edge lets one coordinate range over all values.
    """
    if k < 2 or n < 1:
        raise BadParameter(f"cube needs k >= 2 and n >= 1, got k={k}, n={n}")
    coords = list(itertools.product(range(k), repeat=n))
    weights = [k ** (n - 1 - i) for i in range(n)]
    edges = []
    for axis in range(n):
        for t in coords:
            if t[axis] != 0:
                continue
            base = sum(c * w for c, w in zip(t, weights))
            edges.append([base + a * weights[axis] for a in range(k)])
    return build(k ** n, edges), coords


def phenylene(n: int) -> Hypergraph:
    """Linear phenylene chain: ``n`` hexagon 6-edges ``{6i..6i+5}`` joined by
    square 4-edges ``{6i+4, 6i+5, 6i+6, 6i+7}``.

    Hexagons come first in edge order, then squares.
    """
    if n < 2:
        raise BadParameter(f"phenylene chain needs n >= 2, got {n}")
    hexagons = [range(6 * i, 6 * i + 6) for i in range(n)]
    squares = [range(6 * i + 4, 6 * i + 8) for i in range(n - 1)]
    return build(6 * n, hexagons + squares)


def random_hypertree(edge_sizes, seed: int = 0) -> Hypergraph:
    """Grow a linear hypertree edge by edge.

    Every edge after the first shares one uniformly chosen existing vertex
    and adds ``size - 1`` new ones. Same sizes and seed give the same output.
    """
    sizes = [int(s) for s in edge_sizes]
    if not sizes:
        raise BadParameter("need at least one edge")
    if min(sizes) < 2:
        raise BadParameter(f"edge sizes must be at least 2, got {sizes}")
    rng = np.random.default_rng(seed)
    edges = [list(range(sizes[0]))]
    count = sizes[0]
    for size in sizes[1:]:
        anchor = int(rng.integers(count))
        edges.append([anchor, *range(count, count + size - 1)])
        count += size - 1
    return build(count, edges)


def example_t1() -> Hypergraph:
    """Seven vertices, edges of sizes 2, 3, 3, 2; Wiener index 37."""
    return build(7, [[0, 1], [1, 2, 3], [3, 4, 5], [3, 6]])


def example_clar():
    """Clar-structure hypergraph (42 vertices, seven 6-edges, nine 2-edges)
    and its partition into one central cut and six outer cuts.

    Loaded from the packaged ``clar.hg`` / ``clar.cuts`` files and checked
    against the known counts, component profiles and Wiener index.
    """
    from .io import parse_cuts, parse_hypergraph
    from .metric import wiener_brute

    data = resources.files("hyperwiener") / "data"
    H = parse_hypergraph((data / "clar.hg").read_text())
    C = parse_cuts((data / "clar.cuts").read_text(), H)
    sizes = sorted(H.edge_sizes())
    assert H.vertex_count == 42, "clar: vertex count"
    assert sizes == [2] * 9 + [6] * 7, "clar: edge sizes"
    assert H.is_connected(), "clar: connectivity"
    profiles = sorted(sorted(H.remove_edges(c).components().sizes) for c in C.cuts)
    assert profiles == [[1, 1, 1, 1, 7, 31]] * 6 + [[7] * 6], "clar: cut profiles"
    assert wiener_brute(H) == 2985, "clar: Wiener index"
    return H, C
