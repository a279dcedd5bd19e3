"""Acceptance gate: nine numbered criteria, one test and one summary line each.

Each criterion is verified end to end against live solver runs; nothing is
stubbed and no expected value is read back from the code under test.  The
conftest plugin prints `criterion-N ...: PASS/FAIL` lines after the run.
"""

from __future__ import annotations

import random

from tpc_lab.coloring import (
    TotalColoring,
    check_total_proper_connected,
    is_total_proper_path,
    iter_total_proper_paths,
)
from tpc_lab.families import double_star
from tpc_lab.graphs import (
    Graph,
    canonical_code,
    complement,
    enumerate_connected_graphs,
    is_connected,
    parse_graph6,
    to_graph6,
)
from tpc_lab.harness import TheoremCase, verify_statement
from tpc_lab.solver import decide_k, naive_oracle_tpc, tpc_exact


def _verify(statement, ns, **kw):
    return verify_statement(
        TheoremCase(statement=statement, n_values=tuple(ns), **kw)
    )


def _assert_green(report, max_seconds=None):
    assert report.counterexamples == [], report.counterexamples[:3]
    assert report.timeouts == [], report.timeouts[:5]
    assert report.examined == report.passes > 0
    if max_seconds is not None:
        assert report.wall_time < max_seconds, (
            f"{report.statement} took {report.wall_time:.1f}s, "
            f"limit {max_seconds}s"
        )


def test_criterion_1_complete_iff_one_otherwise_three():
    """Over every connected graph of order <= 6: tpc = 1 exactly for the
    complete graph, and a 2-color exhaustion proves tpc >= 3 for the rest."""
    report = _verify("prop1", range(2, 7))
    _assert_green(report, max_seconds=30 * 60)
    assert report.examined == 1 + 2 + 6 + 21 + 112


def test_criterion_2_trees_resolved_by_bound_coincidence():
    """All trees of order 3..9 hit tpc = max degree + 1 with the structural
    lower and upper bounds already equal, in under a second."""
    report = _verify("thm1", range(3, 10))
    _assert_green(report)
    assert report.examined == 1 + 2 + 3 + 6 + 11 + 23 + 47
    assert report.wall_time < 1.0, f"took {report.wall_time:.2f}s"


def test_criterion_3_solver_equals_oracle_all_small_classes():
    """tpc_exact agrees with the brute-force enumerator on every connected
    class of order <= 5, with the class counts themselves re-derived by a
    union-find over single-transposition images of all labeled edge sets."""
    counts = {}
    for n in (3, 4, 5):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        bit = {p: b for b, p in enumerate(pairs)}
        swaps = []
        for a in range(n):
            for b in range(a + 1, n):
                perm = list(range(n))
                perm[a], perm[b] = b, a
                swaps.append(
                    [bit[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
                )
        size = 1 << len(pairs)
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for mask in range(size):
            for image in swaps:
                other = 0
                rest = mask
                while rest:
                    low = rest & -rest
                    rest ^= low
                    other |= 1 << image[low.bit_length() - 1]
                ra, rb = find(mask), find(other)
                if ra != rb:
                    parent[ra] = rb
        connected = 0
        for mask in range(size):
            if find(mask) != mask:
                continue
            edges = [p for b, p in enumerate(pairs) if mask >> b & 1]
            if is_connected(Graph(n, edges)):
                connected += 1
        counts[n] = connected
    assert counts == {3: 2, 4: 6, 5: 21}

    mismatches = []
    examined = 0
    for n in range(2, 6):
        class_count = 0
        for g in enumerate_connected_graphs(n):
            class_count += 1
            examined += 1
            got = tpc_exact(g).value
            want = naive_oracle_tpc(g)
            if got != want:
                mismatches.append((to_graph6(g), got, want))
        if n >= 3:
            assert class_count == counts[n]
    assert examined == 1 + 2 + 6 + 21
    assert mismatches == [], mismatches


def test_criterion_4_value_n_minus_1_characterization():
    """Graphs with tpc = n - 1 are exactly the double star T(2, n-2), the
    4-cycle, the 4-cycle plus chord, and the triangle with a pendant, order
    by order for n = 3..6; at n = 7 the sweep runs under budget and leaves
    the double star as sole witness."""
    report = _verify("thm4", range(3, 7))
    _assert_green(report)
    assert report.examined == 2 + 6 + 21 + 112

    big = _verify("thm4", (7,))
    _assert_green(big, max_seconds=2 * 60 * 60)
    assert big.examined == 853

    # independent spot check of the order-7 witness itself
    t25 = double_star(2, 5)
    cert = tpc_exact(t25)
    assert cert.value == 6
    assert decide_k(t25, 5).status == "none"


def test_criterion_5_near_tree_piecewise_table():
    """The four near-tree families match their piecewise tpc values for
    n = 5..8 and every fixed coloring rule passes the checker."""
    report = _verify("lemma2", range(5, 9))
    _assert_green(report)
    assert report.examined == 16  # 4 variants x 4 orders

    # the table itself, re-stated against the solver
    from tpc_lab.families import h1_graph, h2_graph, h3_graph, h4_graph

    table = {
        h1_graph: [3, 4, 5, 6],
        h2_graph: [3, 3, 4, 5],
        h3_graph: [3, 4, 4, 5],
        h4_graph: [3, 4, 4, 5],
    }
    for build, values in table.items():
        got = [tpc_exact(build(n)).value for n in range(5, 9)]
        assert got == values, (build.__name__, got, values)


def test_criterion_6_complement_pair_sums():
    """Complement-connected pairs: sums all 6 at order 4; 7 exactly for the
    double-star pair at order 5; within [6, n + 2] at orders 6 and 7 with
    the upper extreme only at double stars; the explicit construction
    reaches 6 at every order."""
    from tpc_lab.harness import ng_scan

    _, rows4 = ng_scan(4)
    assert [row["sum"] for row in rows4] == [6]

    _assert_green(_verify("lemma3", (5,)))
    _assert_green(_verify("thm5", (4, 5, 6, 7)))
    _assert_green(_verify("thm6", (4, 5, 6, 7)))


def test_criterion_7_bipartite_three_colors():
    """Solver value 3 for complete bipartite graphs with parts >= 2 up to
    order 8, and the fixed attached-vertex coloring rules stay within 3
    colors across every case, the two-pendant variant included."""
    report = _verify("thm2", range(4, 9))
    _assert_green(report, max_seconds=5 * 60)
    assert report.examined == 1 + 1 + 2 + 2 + 3  # (s,t) splits per order

    lemma1 = _verify("lemma1", range(2, 9))
    _assert_green(lemma1, max_seconds=5 * 60)
    # every t = 2 column must include the two-pendant variant
    assert lemma1.examined > sum(2 ** (s + 2) for s in range(2, 6))


def test_criterion_8_two_connected_consistency():
    """Every 2-connected graph of order <= 7 has tpc <= 4; orders <= 5 also
    admit strong 4-colorings whose one-vertex extensions keep tpc <= 4."""
    report = _verify("thm3-consistency", range(3, 8))
    _assert_green(report)
    assert report.examined == 1 + 3 + 10 + 56 + 468

    cross = _verify("cor2-consistency", (3, 4, 5))
    _assert_green(cross)
    assert cross.examined == 1 + 3 + 10


def test_criterion_9_invariant_sweeps():
    """Cross-cutting invariants: complement involution, path symmetry, edge
    monotonicity, wildcard soundness, symmetry-breaking agreement, and
    graph6 round-trips, each swept without failures."""
    failures = []
    rng = random.Random(20240901)

    # complement involution and graph6 round-trip over whole classes
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            if complement(complement(g)) != g:
                failures.append(f"involution {to_graph6(g)}")
            if parse_graph6(to_graph6(g)) != g:
                failures.append(f"graph6 {to_graph6(g)}")

    # path symmetry and wildcard soundness on random colorings
    for _ in range(40):
        n = rng.randint(4, 6)
        while True:
            g = Graph(
                n,
                [
                    (i, j)
                    for i in range(n)
                    for j in range(i + 1, n)
                    if rng.random() < 0.5
                ],
            )
            if is_connected(g):
                break
        c = TotalColoring(
            n,
            [rng.randint(1, 3) for _ in range(n)],
            {e: rng.randint(1, 3) for e in g.edges},
        )
        masked = TotalColoring(
            n,
            [v if rng.random() < 0.6 else 0 for v in c.vertex_colors],
            {
                e: (col if rng.random() < 0.6 else 0)
                for e, col in c.edge_colors.items()
            },
        )
        for u in range(n):
            for v in range(u + 1, n):
                for path in iter_total_proper_paths(g, c, u, v):
                    if not is_total_proper_path(g, c, path[::-1]):
                        failures.append(f"symmetry {to_graph6(g)} {path}")
                    if not is_total_proper_path(g, masked, path, wildcard=True):
                        failures.append(f"wildcard {to_graph6(g)} {path}")
                    break  # first path per pair keeps the sweep quick

    # edge monotonicity: random spanning subgraphs never lower tpc
    report = _verify("prop2", (4, 5, 6), samples=150)
    if report.counterexamples or report.timeouts:
        failures.append(f"monotonicity {report.counterexamples[:2]}")

    # symmetry breaking must not change any verdict
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            for k in (2, 3):
                a = decide_k(g, k, symmetry_breaking=True).status
                b = decide_k(g, k, symmetry_breaking=False).status
                if a != b:
                    failures.append(f"symmetry-breaking {to_graph6(g)} k={k}")

    # graph6 round-trip on random orders beyond the enumeration range
    for _ in range(30):
        n = rng.randint(0, 30)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.3
        ]
        g = Graph(n, edges)
        if parse_graph6(to_graph6(g)) != g:
            failures.append(f"graph6 random n={n}")

    assert failures == [], failures[:10]
