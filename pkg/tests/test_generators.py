from functools import reduce

import pytest

from hyperwiener import (BadParameter, acyclicity_check, build, cartesian_product, cube,
                         example_clar, example_t1, phenylene, random_hypertree, single_edge,
                         validate_cut_partition, wiener_brute)


def test_single_edge():
    H = single_edge(3)
    assert H.vertex_count == 3 and H.edge_count == 1
    assert single_edge(2).edges == (frozenset({0, 1}),)
    with pytest.raises(BadParameter):
        single_edge(1)


def test_cartesian_product_examples():
    H = cartesian_product(single_edge(3), single_edge(3))
    assert (H.vertex_count, H.edge_count) == (9, 6)
    T = example_t1()
    assert cartesian_product(T, build(1, [])) == T
    assert cartesian_product(build(1, []), T) == T
    P = cartesian_product(T, single_edge(2))
    assert P.vertex_count == 14
    assert P.edge_count == 7 * 1 + 4 * 2


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_cube_equals_iterated_product(k, n):
    H, coords = cube(k, n)
    P = reduce(cartesian_product, [single_edge(k)] * n)
    assert set(H.edges) == set(P.edges)
    assert len(coords) == k ** n and coords[1] == (0,) * (n - 1) + (1,)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cube_counts(k, n):
    H, _ = cube(k, n)
    assert H.vertex_count == k ** n
    assert H.edge_count == n * k ** (n - 1)


def test_cube_small():
    H, coords = cube(2, 2)
    # the 4-cycle (0,0)-(0,1)-(1,1)-(1,0)
    assert sorted(map(sorted, H.edges)) == [[0, 1], [0, 2], [1, 3], [2, 3]]
    assert cube(4, 1)[0] == single_edge(4)
    for bad in [(1, 2), (3, 0)]:
        with pytest.raises(BadParameter):
            cube(*bad)


def test_phenylene():
    P = phenylene(4)
    assert (P.vertex_count, P.edge_count) == (24, 7)
    assert [sorted(e) for e in phenylene(2).edges] == [
        [0, 1, 2, 3, 4, 5], [6, 7, 8, 9, 10, 11], [4, 5, 6, 7]]
    with pytest.raises(BadParameter):
        phenylene(1)


@pytest.mark.parametrize("n", range(2, 7))
def test_phenylene_shape(n):
    P = phenylene(n)
    assert P.uniformity() is None
    assert not P.is_linear()
    for i in range(n - 1):
        square = P.edges[n + i]
        assert len(square & P.edges[i]) == 2 and len(square & P.edges[i + 1]) == 2


def test_random_hypertree_examples():
    T = random_hypertree([3, 3, 3], seed=9)
    assert T.vertex_count == 7 and T.is_linear() and acyclicity_check(T)[0]
    assert random_hypertree([5], seed=1) == single_edge(5)
    G = random_hypertree([2] * 4, seed=2)
    assert G.vertex_count == 5 and G.uniformity() == 2 and G.is_connected()
    with pytest.raises(BadParameter):
        random_hypertree([3, 1])
    with pytest.raises(BadParameter):
        random_hypertree([])


def test_random_hypertree_deterministic():
    a = random_hypertree([2, 3, 4, 3], seed=123)
    b = random_hypertree([2, 3, 4, 3], seed=123)
    assert a == b
    assert any(random_hypertree([3] * 8, seed=s) != a for s in range(5))


def test_random_hypertrees_are_hypertrees():
    for seed in range(200):
        sizes = [2 + (seed + i) % 3 for i in range(1 + seed % 12)]
        T = random_hypertree(sizes, seed=seed)
        assert T.is_connected() and T.is_linear() and acyclicity_check(T)[0]


def test_t1():
    T = example_t1()
    assert wiener_brute(T) == 37
    assert sorted(T.remove_edges({1}).components().sizes) == [1, 2, 4]
    assert T.uniformity() is None


def test_clar():
    H, C = example_clar()
    assert wiener_brute(H) == 2985
    assert len(C) == 7
    assert validate_cut_partition(H, C).method_valid
