import pytest

from hyperwiener import build, cartesian_product, cube, example_t1, phenylene, random_hypertree


def cycle_graph(n):
    return build(n, [[i, (i + 1) % n] for i in range(n)])


def triangle():
    return cycle_graph(3)


def uniform_hypertrees(count, ks=(2, 3, 4), max_edges=12, seed0=0):
    out = []
    for s in range(count):
        k = ks[s % len(ks)]
        m = 1 + (s * 7919) % max_edges
        out.append(random_hypertree([k] * m, seed=seed0 + s))
    return out


def gated_zoo():
    """Edge-gated instances with at most 64 vertices."""
    zoo = [cube(k, n)[0] for k in (2, 3, 4) for n in (1, 2, 3)]
    zoo += uniform_hypertrees(12)
    zoo += [example_t1(), cycle_graph(4), cycle_graph(6), cycle_graph(8)]
    zoo += [cartesian_product(random_hypertree([3, 3], seed=1), random_hypertree([3, 3, 3], seed=2)),
            cartesian_product(random_hypertree([2] * 4, seed=3), random_hypertree([2] * 3, seed=4)),
            cartesian_product(cycle_graph(6), build(2, [[0, 1]]))]
    return zoo


def mixed_zoo():
    """Small instances of every kind, edge-gated or not."""
    return gated_zoo() + [triangle(), cycle_graph(5), phenylene(2), phenylene(3),
                          build(4, [[0, 1, 2], [1, 2, 3]])]


@pytest.fixture
def t1():
    return example_t1()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
