"""Text formats for hypergraphs and cut partitions.

Hypergraph file::

    # comment
    h <vertex_count>
    e <v1> <v2> ...        one line per edge, 0-based ids, order = edge ids

Cut file::

    c <edge_id> <edge_id> ...   one line per cut
"""
from __future__ import annotations

from .hypergraph import Hypergraph, HypergraphError, build
from .wiener import CutPartition


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        yield lineno, tag, rest


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def parse_hypergraph(text: str, allow_singleton_edges: bool = False) -> Hypergraph:
    vertex_count = None
    edges: list[list[int]] = []
    edge_lines: list[int] = []
    for lineno, tag, rest in _records(text):
        if tag == "h":
            if vertex_count is not None:
                raise ParseError("second header line", lineno)
            if edges:
                raise ParseError("header must precede edges", lineno)
            values = _ints(rest, lineno)
            if len(values) != 1 or values[0] < 0:
                raise ParseError("header is 'h <vertex_count>'", lineno)
            vertex_count = values[0]
        elif tag == "e":
            if vertex_count is None:
                raise ParseError("edge before header", lineno)
            edges.append(_ints(rest, lineno))
            edge_lines.append(lineno)
        else:
            raise ParseError(f"unknown record type {tag!r}", lineno)
    if vertex_count is None:
        raise ParseError("missing header line 'h <vertex_count>'")
    try:
        return build(vertex_count, edges, allow_singleton_edges=allow_singleton_edges)
    except HypergraphError as err:
        if err.edge_index is not None:
            err.line = edge_lines[err.edge_index]
            err.args = (f"line {err.line}: {err.args[0]}",)
        raise


def write_hypergraph(H: Hypergraph) -> str:
    lines = [f"h {H.vertex_count}"]
    lines += ["e " + " ".join(map(str, e)) for e in H.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_cuts(text: str, H: Hypergraph) -> CutPartition:
    """Read a cut file; the result is checked to partition the edges of ``H``."""
    cuts = []
    for lineno, tag, rest in _records(text):
        if tag != "c":
            raise ParseError(f"unknown record type {tag!r}", lineno)
        ids = _ints(rest, lineno)
        if len(set(ids)) != len(ids):
            raise ParseError("edge id repeated within a cut", lineno)
        cuts.append(ids)
    partition = CutPartition.of(cuts)
    partition.check(H)
    return partition


def write_cuts(C: CutPartition) -> str:
    return "".join("c " + " ".join(map(str, sorted(c))) + "\n" for c in C.cuts)
