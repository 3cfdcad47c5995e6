"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary.

All comparisons are exact integer equality except criterion 10, which is a
strict wall-time ordering.
"""
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES, cycle_graph, gated_zoo, triangle
from oracles import is_bipartite, single_crossing_oracle, strict_blocks, floyd_warshall
from hyperwiener import (CutPartition, connected_table, cube, edge_vertex_partition,
                         example_clar, example_t1, gate, is_edge_gated, phenylene,
                         random_hypertree, recognize, theta_structure,
                         validate_cut_partition, verify_single_crossing, wiener_brute,
                         wiener_cut, wiener_general, wiener_hypertree)
from hyperwiener.bench import run_bench


@pytest.fixture
def criterion(request):
    label = request.node.name

    def record(ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {label} {detail}".rstrip())
        assert ok, detail

    return record


def test_ac01_cube_formula(criterion):
    bad = []
    for k in (2, 3, 4):
        for n in (1, 2, 3):
            H, _ = cube(k, n)
            expected = n * comb(k, 2) * k ** (2 * (n - 1))
            got = (wiener_cut(H).total, wiener_brute(H))
            if got != (expected, expected):
                bad.append((k, n, got, expected))
            if k == 2 and expected != n * 4 ** (n - 1):
                bad.append(("Q_n", n, expected))
    criterion(not bad, f"9 cubes exact; mismatches={bad}")


def test_ac02_t1(criterion):
    T = example_t1()
    sizes = sorted(T.remove_edges({1}).components().sizes)
    ok = wiener_brute(T) == 37 and wiener_hypertree(T).total == 37 and sizes == [1, 2, 4]
    criterion(ok, f"W={wiener_brute(T)} tree={wiener_hypertree(T).total} sizes={sizes}")


def test_ac03_phenylene(criterion):
    problems = []
    for n in range(2, 9):
        P = phenylene(n)
        closed = 12 * n ** 3 + 6 * n ** 2 - 3 * n
        b = wiener_general(P, CutPartition.singletons(P))
        if not b.total == wiener_brute(P) == closed:
            problems.append((n, "total"))
        prof = {t.index: sorted(t.sizes) for t in b.per_cut}
        for i in range(n):
            want = ([1, 1, 1, 1, 6 * n - 4] if i in (0, n - 1)
                    else sorted([1, 1, 6 * i + 2, 6 * (n - i - 1) + 2]))
            if prof[i] != want:
                problems.append((n, "hexagon", i))
        for i in range(n - 1):
            if prof[n + i] != sorted([6 * (i + 1), 6 * (n - i - 1)]):
                problems.append((n, "square", i))
        if len(b.residual_pairs) != 2 * (n - 1) or any(d != 1 for *_, d in b.residual_pairs):
            problems.append((n, "residual"))
    criterion(not problems, f"n=2..8; problems={problems}")


def test_ac04_clar(criterion):
    H, C = example_clar()
    rep = validate_cut_partition(H, C)
    b = wiener_general(H, C)
    type_one = [t.contribution for t in b.per_cut if len(t.edges) == 4]
    type_two = [t.contribution for t in b.per_cut if len(t.edges) == 2]
    all_flags = rep.method_valid and all(
        c.pairwise_disjoint and c.disconnects and c.components_convex and c.single_crossing
        for c in rep.cuts)
    ok = (wiener_brute(H) == 2985 and b.total == 2985 and type_one == [735]
          and type_two == [375] * 6 and all_flags)
    criterion(ok, f"W={b.total} I={type_one} II={type_two} flags={all_flags}")


def test_ac05_recognition(criterion):
    problems = []
    for k in (2, 3, 4):
        for n in (1, 2, 3):
            r = recognize(cube(k, n)[0], validate_convexity=True)
            if not (r.verdict and r.routes_agree):
                problems.append(("cube", k, n))
    for name, H, reason in [("triangle", triangle(), "not edge-gated"),
                            ("LP3", phenylene(3), "not uniform"),
                            ("LP2", phenylene(2), "not uniform"),
                            ("T1", example_t1(), "not uniform")]:
        r = recognize(H, validate_convexity=True)
        if r.verdict or reason not in r.reason:
            problems.append((name, r.reason))
    criterion(not problems, f"problems={problems}")


def test_ac06_theta_classes(criterion):
    problems = []
    for k in (2, 3, 4):
        for n in (1, 2, 3):
            ts = theta_structure(cube(k, n)[0])
            if len(ts.classes) != n:
                problems.append((k, n, "class count"))
            for c in ts.classes:
                if len(c.edges) != k ** (n - 1) or c.sizes != [k ** (n - 1)] * k:
                    problems.append((k, n, c.edges[:3]))
    criterion(not problems, f"problems={problems}")


def test_ac07_property_suite(criterion):
    mismatches = []
    for s in range(200):
        k = (2, 3, 4)[s % 3]
        m = 1 + s % 12
        T = random_hypertree([k] * m, seed=s)
        W = wiener_brute(T)
        got = (wiener_cut(T).total, wiener_hypertree(T).total,
               wiener_general(T, CutPartition.singletons(T)).total)
        if got != (W, W, W):
            mismatches.append(("uniform", s))
    for s in range(50):
        sizes = [2 + (s * 7 + i * 3) % 3 for i in range(1 + s % 12)]
        T = random_hypertree(sizes, seed=1000 + s)
        W = wiener_brute(T)
        got = (wiener_hypertree(T).total, wiener_general(T, CutPartition.singletons(T)).total)
        if got != (W, W):
            mismatches.append(("mixed", s))
    criterion(not mismatches, f"250 hypertrees; mismatches={mismatches}")


def test_ac08_structure_lemmas(criterion):
    problems = []
    for H in gated_zoo():
        assert H.vertex_count <= 64
        D = connected_table(H)
        FW = floyd_warshall(H)
        for i, e in enumerate(H.edges):
            part = edge_vertex_partition(H, i, D)
            blocks = part.blocks
            if part.anchor_to_block != {a: frozenset(b) for a, b in strict_blocks(FW, e).items()}:
                problems.append(("blocks", i))
            if sum(map(len, blocks)) != H.vertex_count:
                problems.append(("partition", i))
            for f in H.edges:
                traces = [len(f & b) for b in blocks]
                if not (all(t == 1 for t in traces) or max(traces) == len(f)):
                    problems.append(("trace", i))
            for x in range(H.vertex_count):
                cands = [a for a in e if all(FW[x][b] == FW[x][a] + 1 for b in e if b != a)]
                if len(cands) != 1 or gate(H, x, i, D) != cands[0]:
                    problems.append(("gate", x, i))
    two_uniform = [cycle_graph(n) for n in range(3, 11)] + [cube(2, 3)[0]]
    for H in two_uniform:
        if bool(is_edge_gated(H)) != is_bipartite(H):
            problems.append(("bipartite", H.vertex_count))
    criterion(not problems, f"{len(gated_zoo())} gated instances; problems={problems[:5]}")


def test_ac09_single_crossing(criterion):
    disagreements = []
    cases = []
    for k, n in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        H = cube(k, n)[0]
        cases += [(H, set(c.edges)) for c in theta_structure(H).classes]
    for n in (2, 3, 4):
        P = phenylene(n)
        cases += [(P, {e}) for e in range(P.edge_count)]
        cases.append((P, {0, n - 1}))
    for H, F in cases:
        if verify_single_crossing(H, F) != single_crossing_oracle(H, F):
            disagreements.append(sorted(F))
    criterion(not disagreements, f"{len(cases)} cases; disagreements={disagreements}")


def test_ac10_benchmark(criterion):
    records = run_bench([("phenylene", [8, 16, 32])], repeats=5)
    at32 = {r.method: r for r in records if r.params == "n=32"}
    values_equal = all(
        len({r.wiener for r in records if r.params == p}) == 1
        for p in ("n=8", "n=16", "n=32"))
    faster = at32["general"].nanos < at32["brute"].nanos
    criterion(values_equal and faster,
              f"n=32 general={at32['general'].nanos}ns brute={at32['brute'].nanos}ns")
