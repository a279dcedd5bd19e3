"""Solver tests: bounds, the k-decision search, exact values, certificates.

The exact solver is cross-checked against naive_oracle_tpc, a brute-force
enumerator that shares no pruning or ordering with it.
"""

from __future__ import annotations

import random

import pytest

from tpc_lab.coloring import (
    TotalColoring,
    check_total_proper_connected,
    has_strong_property,
    is_total_proper_path,
)
from tpc_lab.families import (
    c4_plus_e,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_star,
    h2_graph,
    path_graph,
    s4_plus_e,
    star_graph,
)
from tpc_lab.graphs import (
    Graph,
    enumerate_connected_graphs,
    is_complete,
    relabel,
)
from tpc_lab.solver import (
    DEFAULT_BUDGET,
    SolveBudget,
    _forced_diseqs,
    _structured_witness,
    certificate_to_json_dict,
    compute_bounds,
    decide_k,
    find_strong_coloring,
    naive_oracle_tpc,
    tpc_exact,
)


# --------------------------------------------------------------- bounds


def test_bounds_complete():
    b = compute_bounds(complete_graph(4))
    assert (b.lower, b.upper) == (1, 1)
    assert b.lower_reason == "complete" and b.upper_reason == "complete"


def test_bounds_traceable_noncomplete():
    b = compute_bounds(path_graph(4))
    assert (b.lower, b.upper) == (3, 3)
    assert b.lower_reason == "noncomplete" and b.upper_reason == "traceable"
    assert compute_bounds(cycle_graph(5)).upper == 3


def test_bounds_bridge_lower():
    b = compute_bounds(star_graph(5))
    assert b.lower == 5 and b.lower_reason == "bridges"
    assert b.upper == 5 and b.upper_reason == "spanning-tree"
    # two bridges at a vertex stay below the noncomplete floor of 3
    b = compute_bounds(path_graph(5))
    assert b.lower == 3 and b.lower_reason == "noncomplete"


def test_bounds_gap_case():
    # triangle with pendants at 0 plus a length-2 tail: not traceable,
    # spanning tree pushes the upper bound above the true value
    b = compute_bounds(h2_graph(6))
    assert b.lower == 3 and b.upper == 4
    assert b.upper_reason == "spanning-tree"


def test_bounds_validation():
    with pytest.raises(ValueError):
        compute_bounds(Graph(1))
    with pytest.raises(ValueError):
        compute_bounds(Graph(4, [(0, 1), (2, 3)]))


def test_bounds_stay_valid_under_tiny_ham_budget():
    b = compute_bounds(cycle_graph(6), SolveBudget(ham_steps=1))
    assert b.lower <= 3 <= b.upper


# -------------------------------------------------------------- decide_k


def test_decide_k_validation():
    with pytest.raises(ValueError):
        decide_k(path_graph(3), 0)
    with pytest.raises(ValueError):
        decide_k(Graph(4, [(0, 1), (2, 3)]), 2)


def test_decide_k_exhaustive_honesty_small_orders():
    """decide_k(g, tpc-1) refutes and decide_k(g, tpc) finds, n <= 5."""
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            v = tpc_exact(g).value
            if v > 1:
                assert decide_k(g, v - 1).status == "none"
            res = decide_k(g, v)
            assert res.status == "found"
            c = res.coloring
            assert c.num_colors() <= v
            assert check_total_proper_connected(g, c).ok


def test_decide_k_found_coloring_respects_k():
    res = decide_k(cycle_graph(5), 3)
    assert res.status == "found"
    assert res.coloring.palette() <= {1, 2, 3}


def test_decide_k_symmetry_breaking_agreement():
    """The canonical-color restriction never changes the verdict."""
    for n in range(2, 6):
        for g in enumerate_connected_graphs(n):
            if is_complete(g):
                continue
            for k in (2, 3):
                on = decide_k(g, k, symmetry_breaking=True)
                off = decide_k(g, k, symmetry_breaking=False)
                assert on.status == off.status, (g, k)


def test_decide_k_timeout():
    res = decide_k(h2_graph(6), 3, SolveBudget(max_nodes=1))
    assert res.status == "timeout"
    assert res.coloring is None


def test_decide_k_instant_refutation_without_nodes():
    # with k = 1 or 2 no internal vertex can ever be crossed, so a pair
    # whose paths all have internal vertices dies at the root, before any
    # color assignment
    res = decide_k(cycle_graph(4), 2)
    assert res.status == "none"
    assert res.nodes == 0
    # unique-path pairs are handled by disequalities instead; still "none"
    assert decide_k(path_graph(4), 2).status == "none"


# ------------------------------------------------------------ tpc_exact


def test_tpc_spot_values():
    assert tpc_exact(complete_graph(5)).value == 1
    assert tpc_exact(path_graph(4)).value == 3
    assert tpc_exact(cycle_graph(4)).value == 3
    assert tpc_exact(star_graph(5)).value == 5
    assert tpc_exact(double_star(2, 3)).value == 4
    assert tpc_exact(s4_plus_e()).value == 3
    assert tpc_exact(c4_plus_e()).value == 3
    assert tpc_exact(complete_bipartite(4, 4)).value == 3


def test_tpc_matches_naive_oracle_up_to_order_4():
    # the full order-5 sweep runs in the acceptance suite
    for n in range(2, 5):
        for g in enumerate_connected_graphs(n):
            assert tpc_exact(g).value == naive_oracle_tpc(g)


def test_tpc_certificate_contents():
    g = h2_graph(6)
    cert = tpc_exact(g)
    assert cert.status == "exact"
    assert cert.value == 3
    assert cert.lower_bound == cert.upper_bound == 3
    assert cert.lower_reason == "bound-match"
    assert cert.witness.num_colors() <= cert.value
    assert check_total_proper_connected(g, cert.witness).ok
    pairs = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)}
    assert set(cert.pair_witnesses) == pairs
    for (u, v), path in cert.pair_witnesses.items():
        assert path[0] == u and path[-1] == v
        assert is_total_proper_path(g, cert.witness, path)


def test_tpc_lower_reason_exhausted():
    # star: bounds meet, reason stays bound-match
    assert tpc_exact(star_graph(4)).lower_reason == "bound-match"
    # extremal double star: the bridge bound already equals the value
    assert tpc_exact(double_star(2, 4)).lower_reason == "bound-match"
    # triangle with pendants 0, 1 at one corner and 2 at another: value 4
    # exceeds every structural bound, so k = 3 must be exhausted
    from tpc_lab.graphs import parse_graph6

    cert = tpc_exact(parse_graph6("E?NW"))
    assert cert.value == 4
    assert cert.lower_reason == "exhausted-k-minus-1"


def test_tpc_bounds_only_on_timeout():
    g = h2_graph(6)
    cert = tpc_exact(g, SolveBudget(max_nodes=1))
    assert cert.status == "bounds-only"
    assert cert.lower_reason == "incomplete-search"
    assert cert.lower_bound == 3
    assert cert.value == cert.upper_bound == 4
    assert check_total_proper_connected(g, cert.witness).ok


def test_tpc_validation():
    with pytest.raises(ValueError):
        tpc_exact(Graph(1))
    with pytest.raises(ValueError):
        tpc_exact(Graph(4, [(0, 1), (2, 3)]))


def test_certificate_json_schema():
    cert = tpc_exact(cycle_graph(4))
    doc = certificate_to_json_dict(cert)
    assert set(doc) == {
        "graph6",
        "tpc",
        "status",
        "lower_bound",
        "upper_bound",
        "lower_reason",
        "witness",
        "pair_witnesses",
    }
    assert doc["graph6"] == "Cl"[0] + doc["graph6"][1:]  # starts with order byte
    assert doc["tpc"] == 3 and doc["status"] == "exact"
    again = TotalColoring.from_json_dict(doc["witness"])
    assert again == cert.witness
    for u, v, path in doc["pair_witnesses"]:
        assert path[0] == u and path[-1] == v


# ------------------------------------------------------- naive oracle


def test_naive_oracle_spot_values():
    assert naive_oracle_tpc(complete_graph(3)) == 1
    assert naive_oracle_tpc(path_graph(3)) == 3
    assert naive_oracle_tpc(star_graph(4)) == 4
    assert naive_oracle_tpc(cycle_graph(5)) == 3


def test_naive_oracle_validation():
    with pytest.raises(ValueError):
        naive_oracle_tpc(complete_graph(6))
    with pytest.raises(ValueError):
        naive_oracle_tpc(Graph(4, [(0, 1), (2, 3)]))
    assert naive_oracle_tpc(complete_graph(6), max_order=6) == 1


# ------------------------------------------------- structured witness


def test_structured_witness_on_scrambled_bipartite():
    rng = random.Random(41)
    for s, t in [(3, 2), (4, 3), (5, 2), (4, 4), (6, 5)]:
        g = complete_bipartite(s, t)
        for _ in range(4):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            c = _structured_witness(h)
            assert c is not None
            assert c.num_colors() <= 3
            assert check_total_proper_connected(h, c).ok, (s, t, perm)


def test_structured_witness_rejects_other_graphs():
    assert _structured_witness(complete_graph(4)) is None  # odd cycles
    assert _structured_witness(star_graph(6)) is None  # part of size 1
    assert _structured_witness(cycle_graph(6)) is None  # bipartite, not complete
    assert _structured_witness(cycle_graph(4)) is None  # too small for the rule


def test_scrambled_bipartite_solves_fast():
    rng = random.Random(11)
    g = complete_bipartite(5, 3)
    perm = list(range(8))
    rng.shuffle(perm)
    cert = tpc_exact(relabel(g, perm))
    assert cert.value == 3 and cert.status == "exact"


# --------------------------------------------------- forced diseqs


def test_forced_diseqs_on_path():
    g = path_graph(3)  # n = 3: vertex ids 0..2, edge ids 3, 4
    diseqs, dynamic = _forced_diseqs(g)
    assert dynamic == []
    assert set(diseqs) == {(3, 4), (1, 3), (1, 4)}


def test_forced_diseqs_on_cycle():
    diseqs, dynamic = _forced_diseqs(cycle_graph(4))
    assert diseqs == []
    assert set(dynamic) == {(0, 2), (1, 3)}


def test_forced_diseqs_respected():
    """Solutions of decide_k satisfy every forced disequality."""
    for g in [path_graph(5), double_star(2, 3), h2_graph(6)]:
        v = tpc_exact(g).value
        res = decide_k(g, v)
        assert res.status == "found"
        n = g.n
        flat = list(res.coloring.vertex_colors) + [
            res.coloring.edge_colors[e] for e in g.edges
        ]
        diseqs, _ = _forced_diseqs(g)
        for x, y in diseqs:
            assert flat[x] != flat[y]


# ------------------------------------------------- strong colorings


def test_find_strong_coloring_two_connected_small():
    for n in range(3, 6):
        for g in enumerate_connected_graphs(n):
            if not (len(g.edges) and compute_bounds(g).lower <= 4):
                continue
            from tpc_lab.graphs import is_two_connected

            if not is_two_connected(g):
                continue
            res = find_strong_coloring(g, 4)
            assert res.status == "found", g
            assert res.coloring.palette() <= {1, 2, 3, 4}
            assert has_strong_property(g, res.coloring)


def test_find_strong_coloring_impossible_on_trees():
    # a tree has one path per pair, and the property needs two end-edge
    # disjoint paths, so no palette can ever work
    res = find_strong_coloring(path_graph(3), 2)
    assert res.status == "none"


def test_find_strong_coloring_validation():
    with pytest.raises(ValueError):
        find_strong_coloring(cycle_graph(4), 0)
    with pytest.raises(ValueError):
        find_strong_coloring(Graph(4, [(0, 1), (2, 3)]))
