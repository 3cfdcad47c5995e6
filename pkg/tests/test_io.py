import pytest

from hyperwiener import (CutEdgesIntersect, CutPartition, EdgeTooSmall, NotAPartition,
                         OutOfRangeVertex, ParseError, cube, example_clar, example_t1,
                         parse_cuts, parse_hypergraph, phenylene, random_hypertree,
                         single_edge, write_cuts, write_hypergraph)


def test_parse_basic():
    assert parse_hypergraph("h 3\ne 0 1 2") == single_edge(3)
    assert parse_hypergraph("# c\n\nh 3\n# mid\ne 2 1 0\n") == single_edge(3)


def test_parse_error_has_line():
    with pytest.raises(OutOfRangeVertex) as info:
        parse_hypergraph("h 2\ne 0 9")
    assert info.value.line == 2 and "line 2" in str(info.value)
    with pytest.raises(EdgeTooSmall) as info:
        parse_hypergraph("# x\nh 3\ne 0 1\ne 2\n")
    assert info.value.line == 4


@pytest.mark.parametrize("text", [
    "e 0 1\nh 2", "h 2\nh 2", "h x", "h 2\ne 0 a", "h 2\nq 1", "", "h -1", "h 2 3",
])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_hypergraph(text)


def test_singleton_edges_flag():
    with pytest.warns(UserWarning):
        H = parse_hypergraph("h 3\ne 0 1\ne 2\n", allow_singleton_edges=True)
    assert H.edge_count == 1


@pytest.mark.parametrize("H", [example_t1(), phenylene(3), cube(3, 2)[0], example_clar()[0],
                               random_hypertree([2, 3, 4], seed=7)],
                         ids=["t1", "lp3", "q32", "clar", "tree"])
def test_round_trip(H):
    text = write_hypergraph(H)
    assert parse_hypergraph(text) == H
    assert write_hypergraph(parse_hypergraph(text)) == text
    assert write_hypergraph(parse_hypergraph("# comment\n" + text)) == text


def test_t1_file():
    assert write_hypergraph(example_t1()) == "h 7\ne 0 1\ne 1 2 3\ne 3 4 5\ne 3 6\n"


def test_cuts_round_trip():
    H, C = example_clar()
    assert parse_cuts(write_cuts(C), H) == C
    P = phenylene(3)
    assert parse_cuts("c 0\nc 1\nc 2\nc 3\nc 4\n", P) == CutPartition.singletons(P)


@pytest.mark.parametrize("text, exc", [
    ("c 0\nc 1\n", NotAPartition),
    ("c 0 2\nc 1\n", CutEdgesIntersect),
    ("c 0\nc 1\nc 2\nc 2\n", NotAPartition),
    ("c 0 0\nc 1 2\n", ParseError),
    ("x 0\n", ParseError),
])
def test_cut_errors(text, exc):
    with pytest.raises(exc):
        parse_cuts(text, phenylene(2))
