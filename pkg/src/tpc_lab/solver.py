"""Exact total-proper connection numbers with machine-checkable certificates.

The solver is a cascade: complete graphs are answered directly, traceable
noncomplete graphs take the cyclic Hamiltonian-path coloring, and everything
else runs iterative deepening between structural bounds.  decide_k is a plain
backtracking search over a DFS-interleaved element order with three sound
reductions: a color may only open a fresh palette slot when it equals
1 + (largest color used so far); vertex pairs whose only simple path is
unique turn into hard disequalities along that path, enforced at assignment
time; and every few assignments the remaining pairs are tested with wildcard
(color 0 = optimistic) connectivity, which never rules out a completable
branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    TotalColoring,
    _find_path,
    _path_ok,
    check_total_proper_connected,
    has_strong_property,
)
from .families import color_complete_bipartite, color_traceable, color_tree
from .graphs import (
    Graph,
    find_hamiltonian_path,
    is_complete,
    is_connected,
    low_degree_spanning_tree,
    max_bridge_degree,
    max_degree,
)


@dataclass(frozen=True)
class SolveBudget:
    """Search limits: backtracking nodes per decide_k call, steps per
    Hamiltonian-path search."""

    max_nodes: int = 5_000_000
    ham_steps: int = 2_000_000


DEFAULT_BUDGET = SolveBudget()


@dataclass(frozen=True)
class Bounds:
    lower: int
    lower_reason: str  # "complete" | "noncomplete" | "bridges"
    upper: int
    upper_reason: str  # "complete" | "traceable" | "spanning-tree"


@dataclass(frozen=True)
class DecideResult:
    status: str  # "found" | "none" | "timeout"
    coloring: TotalColoring | None
    nodes: int


@dataclass(frozen=True)
class TpcCertificate:
    graph: Graph
    value: int
    status: str  # "exact" | "bounds-only"
    lower_bound: int
    upper_bound: int
    lower_reason: str  # "bound-match" | "exhausted-k-minus-1" | "incomplete-search"
    witness: TotalColoring
    pair_witnesses: dict[tuple[int, int], tuple[int, ...]]


class _NodeBudget(Exception):
    pass


def compute_bounds(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> Bounds:
    """Structural lower/upper bounds.

    Lower: 1 for complete graphs, else 3, raised to b+1 when some vertex
    carries b cut edges (their colors plus that vertex's color must all
    differ).  Upper: 3 when a Hamiltonian path is found, else max degree of a
    low-degree spanning tree plus 1.  A budget-limited path search falls back
    to the spanning-tree bound, so the result stays valid either way.
    """
    if g.n < 2:
        raise ValueError("bounds need order >= 2")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if is_complete(g):
        return Bounds(1, "complete", 1, "complete")
    b = max_bridge_degree(g)
    if b + 1 > 3:
        lower, lower_reason = b + 1, "bridges"
    else:
        lower, lower_reason = 3, "noncomplete"
    ham = find_hamiltonian_path(g, budget.ham_steps)
    if ham.status == "found":
        upper, upper_reason = 3, "traceable"
    else:
        tree = low_degree_spanning_tree(g)
        upper, upper_reason = max_degree(tree) + 1, "spanning-tree"
    return Bounds(lower, lower_reason, upper, upper_reason)


def _element_order(g: Graph) -> list[tuple[bool, int]]:
    # DFS from vertex 0; each tree edge is followed immediately by the
    # vertex it discovers, back edges appear where first scanned
    order: list[tuple[bool, int]] = [(False, 0)]
    seen_v = [False] * g.n
    seen_v[0] = True
    seen_e = [False] * g.m

    def dfs(u: int) -> None:
        for w, ei in g.inc[u]:
            if seen_e[ei]:
                continue
            seen_e[ei] = True
            order.append((True, ei))
            if not seen_v[w]:
                seen_v[w] = True
                order.append((False, w))
                dfs(w)

    dfs(0)
    return order


def _simple_paths_limited(
    g: Graph, s: int, t: int, limit: int
) -> list[tuple[int, ...]]:
    # plain simple s-t paths, stopping as soon as `limit` are collected
    out: list[tuple[int, ...]] = []
    path = [s]
    on = [False] * g.n
    on[s] = True

    def rec(u: int) -> None:
        for w, _ in g.inc[u]:
            if len(out) >= limit:
                return
            if w == t:
                out.append(tuple(path) + (t,))
            elif not on[w]:
                on[w] = True
                path.append(w)
                rec(w)
                path.pop()
                on[w] = False

    rec(s)
    return out


def _forced_diseqs(
    g: Graph,
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Hard constraints from vertex pairs with a unique simple path.

    Such a pair is connected exactly when that one path is total-proper, so
    every adjacency condition along it becomes a disequality between element
    ids (vertex v -> v, edge i -> n + i).  Returns the disequalities and the
    nonadjacent pairs that still need dynamic path checks (two paths or
    more).
    """
    n = g.n
    diseqs: set[tuple[int, int]] = set()
    dynamic: list[tuple[int, int]] = []

    def add(x: int, y: int) -> None:
        diseqs.add((x, y) if x < y else (y, x))

    for u in range(n):
        for v in range(u + 1, n):
            if g.adj[u] >> v & 1:
                continue
            paths = _simple_paths_limited(g, u, v, 2)
            if len(paths) >= 2:
                dynamic.append((u, v))
                continue
            path = paths[0]
            eids = [g.edge_id(a, b) for a, b in zip(path, path[1:])]
            last = len(path) - 1
            for i in range(len(eids) - 1):
                add(n + eids[i], n + eids[i + 1])
            for i in range(1, last):
                add(path[i], n + eids[i - 1])
                add(path[i], n + eids[i])
                if i + 1 < last:
                    add(path[i], path[i + 1])
    return sorted(diseqs), dynamic


def decide_k(
    g: Graph,
    k: int,
    budget: SolveBudget | None = DEFAULT_BUDGET,
    symmetry_breaking: bool = True,
    prune_interval: int = 4,
) -> DecideResult:
    """Is there a total coloring with at most k colors connecting all pairs?

    "found" carries a witness, "none" is an exhaustive proof, "timeout"
    reports the node budget ran out first.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n < 1 or not is_connected(g):
        raise ValueError("graph must be connected and nonempty")
    n, m = g.n, g.m
    order = _element_order(g)
    total = n + m
    vcol = [0] * n
    ecol = [0] * m
    flat = [0] * total
    arrays = [ecol if is_edge else vcol for is_edge, _ in order]
    slots = [idx for _, idx in order]
    gids = [n + idx if is_edge else idx for is_edge, idx in order]
    # a degree-1 vertex is never internal on a path and endpoint colors are
    # unconstrained, so its color is irrelevant here: pin it to 1 (any
    # solution can be recolored that way, so exhaustion stays a proof)
    pinned = [
        not is_edge and len(g.inc[idx]) == 1 for is_edge, idx in order
    ]
    diseqs, pairs = _forced_diseqs(g)
    partners: list[list[int]] = [[] for _ in range(total)]
    for x, y in diseqs:
        partners[x].append(y)
        partners[y].append(x)
    cache: dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    inc = g.inc
    max_nodes = budget.max_nodes if budget is not None else None
    nodes = 0

    def pairs_ok(wc: bool) -> bool:
        for p in pairs:
            hit = cache.get(p)
            if hit is not None and _path_ok(vcol, ecol, hit[0], hit[1], wc):
                continue
            path = _find_path(inc, vcol, ecol, p[0], p[1], wc, k)
            if path is None:
                return False
            cache[p] = (
                path,
                tuple(g.edge_id(a, b) for a, b in zip(path, path[1:])),
            )
        return True

    def bt(depth: int, maxc: int) -> bool:
        nonlocal nodes
        if depth == total:
            return pairs_ok(False)
        arr = arrays[depth]
        idx = slots[depth]
        gid = gids[depth]
        forbidden = {flat[y] for y in partners[gid] if flat[y]}
        if pinned[depth]:
            colors = (1,)
        elif symmetry_breaking:
            colors = range(1, min(k, maxc + 1) + 1)
        else:
            colors = range(1, k + 1)
        nxt = depth + 1
        check_here = nxt < total and nxt % prune_interval == 0
        for c in colors:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise _NodeBudget
            if c in forbidden:
                continue
            arr[idx] = c
            flat[gid] = c
            if not check_here or pairs_ok(True):
                if bt(nxt, c if c > maxc else maxc):
                    return True
            arr[idx] = 0
            flat[gid] = 0
        return False

    if not pairs_ok(True):
        # infeasible before any assignment (k < 3 with nonadjacent pairs)
        return DecideResult("none", None, 0)
    try:
        if bt(0, 0):
            coloring = TotalColoring(
                n, vcol, {e: ecol[i] for i, e in enumerate(g.edges)}
            )
            return DecideResult("found", coloring, nodes)
        return DecideResult("none", None, nodes)
    except _NodeBudget:
        return DecideResult("timeout", None, nodes)


def find_strong_coloring(
    g: Graph,
    k: int = 4,
    budget: SolveBudget | None = DEFAULT_BUDGET,
    prune_interval: int = 4,
) -> DecideResult:
    """Search for a k-coloring meeting the two-path endpoint-spread property.

    Same canonical backtracking as decide_k, but each element first tries the
    color at its cyclic position so spread-out colorings surface early, and
    leaves must additionally pass has_strong_property.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n < 2 or not is_connected(g):
        raise ValueError("graph must be connected with order >= 2")
    n, m = g.n, g.m
    order = _element_order(g)
    total = n + m
    vcol = [0] * n
    ecol = [0] * m
    flat = [0] * total
    arrays = [ecol if is_edge else vcol for is_edge, _ in order]
    slots = [idx for _, idx in order]
    gids = [n + idx if is_edge else idx for is_edge, idx in order]
    diseqs, pairs = _forced_diseqs(g)
    partners: list[list[int]] = [[] for _ in range(total)]
    for x, y in diseqs:
        partners[x].append(y)
        partners[y].append(x)
    cache: dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    inc = g.inc
    max_nodes = budget.max_nodes if budget is not None else None
    nodes = 0

    def pairs_ok(wc: bool) -> bool:
        for p in pairs:
            hit = cache.get(p)
            if hit is not None and _path_ok(vcol, ecol, hit[0], hit[1], wc):
                continue
            path = _find_path(inc, vcol, ecol, p[0], p[1], wc, k)
            if path is None:
                return False
            cache[p] = (
                path,
                tuple(g.edge_id(a, b) for a, b in zip(path, path[1:])),
            )
        return True

    def leaf_ok() -> TotalColoring | None:
        if not pairs_ok(False):
            return None
        coloring = TotalColoring(
            n, vcol, {e: ecol[i] for i, e in enumerate(g.edges)}
        )
        return coloring if has_strong_property(g, coloring) else None

    def bt(depth: int, maxc: int) -> TotalColoring | None:
        nonlocal nodes
        if depth == total:
            return leaf_ok()
        arr = arrays[depth]
        idx = slots[depth]
        gid = gids[depth]
        forbidden = {flat[y] for y in partners[gid] if flat[y]}
        limit = min(k, maxc + 1)
        nxt = depth + 1
        check_here = nxt < total and nxt % prune_interval == 0
        preferred = depth % k + 1
        cands = list(range(1, limit + 1))
        if preferred <= limit:
            cands.remove(preferred)
            cands.insert(0, preferred)
        for c in cands:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise _NodeBudget
            if c in forbidden:
                continue
            arr[idx] = c
            flat[gid] = c
            if not check_here or pairs_ok(True):
                got = bt(nxt, c if c > maxc else maxc)
                if got is not None:
                    return got
            arr[idx] = 0
            flat[gid] = 0
        return None

    if not pairs_ok(True):
        return DecideResult("none", None, 0)
    try:
        got = bt(0, 0)
    except _NodeBudget:
        return DecideResult("timeout", None, nodes)
    if got is None:
        return DecideResult("none", None, nodes)
    return DecideResult("found", got, nodes)


def _upper_witness(g: Graph, bounds: Bounds, budget: SolveBudget) -> TotalColoring:
    # constructive coloring matching the upper bound
    if bounds.upper_reason == "traceable":
        ham = find_hamiltonian_path(g, budget.ham_steps)
        assert ham.status == "found"
        return color_traceable(g, ham.path)
    tree = low_degree_spanning_tree(g)
    base = color_tree(tree)
    ec = {e: 1 for e in g.edges}
    ec.update(base.edge_colors)
    return TotalColoring(g.n, base.vertex_colors, ec)


def _structured_witness(g: Graph) -> TotalColoring | None:
    """Candidate coloring for recognized structure, verified by the caller.

    Complete bipartite graphs with both parts >= 2 get the constructive
    3-coloring, pulled back through a part-preserving bijection (any such
    bijection is an isomorphism of K_{s,t}).
    """
    side = [-1] * g.n
    side[0] = 0
    queue = [0]
    for u in queue:
        for w, _ in g.inc[u]:
            if side[w] == -1:
                side[w] = side[u] ^ 1
                queue.append(w)
            elif side[w] == side[u]:
                return None
    big = [v for v in range(g.n) if side[v] == 0]
    small = [v for v in range(g.n) if side[v] == 1]
    if len(big) < len(small):
        big, small = small, big
    s, t = len(big), len(small)
    if t < 2 or s + t < 5 or g.m != s * t:
        return None
    ref_g, ref = color_complete_bipartite(s, t)
    to_g = big + small
    vcol = [0] * g.n
    for i in range(g.n):
        vcol[to_g[i]] = ref.vertex_color(i)
    ecol: dict[tuple[int, int], int] = {}
    for a, b in ref_g.edges:
        u, v = to_g[a], to_g[b]
        ecol[(u, v) if u < v else (v, u)] = ref.edge_color(a, b)
    return TotalColoring(g.n, vcol, ecol)


def tpc_exact(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> TpcCertificate:
    """Exact total-proper connection number with witness and pair paths.

    When a decide_k call times out the certificate downgrades to
    "bounds-only": value holds the best proven upper bound and lower_bound
    the best proven lower bound, never a guess.
    """
    if g.n < 2:
        raise ValueError("tpc is defined for connected graphs of order >= 2")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if is_complete(g):
        witness = TotalColoring(g.n, [1] * g.n, {e: 1 for e in g.edges})
        return _finish(g, 1, "exact", 1, 1, "bound-match", witness)

    bounds = compute_bounds(g, budget)
    upper = bounds.upper
    cached_witness: TotalColoring | None = None
    candidate = _structured_witness(g)
    if candidate is not None and candidate.num_colors() < upper:
        if check_total_proper_connected(g, candidate).ok:
            upper = candidate.num_colors()
            cached_witness = candidate
    if bounds.lower == upper:
        witness = cached_witness or _upper_witness(g, bounds, budget)
        return _finish(
            g, bounds.lower, "exact", bounds.lower, upper,
            "bound-match", witness,
        )

    for k in range(bounds.lower, upper):
        res = decide_k(g, k, budget)
        if res.status == "found":
            reason = "bound-match" if k == bounds.lower else "exhausted-k-minus-1"
            return _finish(
                g, k, "exact", k, k, reason, res.coloring
            )
        if res.status == "timeout":
            witness = cached_witness or _upper_witness(g, bounds, budget)
            return _finish(
                g, upper, "bounds-only", k, upper,
                "incomplete-search", witness,
            )
    witness = cached_witness or _upper_witness(g, bounds, budget)
    return _finish(
        g, upper, "exact", upper, upper,
        "exhausted-k-minus-1", witness,
    )


def _finish(
    g: Graph,
    value: int,
    status: str,
    lower: int,
    upper: int,
    reason: str,
    witness: TotalColoring,
) -> TpcCertificate:
    check = check_total_proper_connected(g, witness)
    assert check.ok, "witness coloring failed its own check"
    return TpcCertificate(
        graph=g,
        value=value,
        status=status,
        lower_bound=lower,
        upper_bound=upper,
        lower_reason=reason,
        witness=witness,
        pair_witnesses=check.witnesses,
    )


def certificate_to_json_dict(cert: TpcCertificate) -> dict:
    from .graphs import to_graph6

    return {
        "graph6": to_graph6(cert.graph),
        "tpc": cert.value,
        "status": cert.status,
        "lower_bound": cert.lower_bound,
        "upper_bound": cert.upper_bound,
        "lower_reason": cert.lower_reason,
        "witness": cert.witness.to_json_dict(),
        "pair_witnesses": [
            [u, v, list(path)]
            for (u, v), path in sorted(cert.pair_witnesses.items())
        ],
    }


def _all_simple_paths(g: Graph, s: int, t: int):
    # every simple s..t path as (vertex tuple, edge-id tuple)
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    visited = bytearray(g.n)
    visited[s] = 1
    path = [s]
    eids: list[int] = []

    def go(x: int) -> None:
        for y, ei in g.inc[x]:
            if visited[y]:
                continue
            if y == t:
                out.append((tuple(path) + (y,), tuple(eids) + (ei,)))
                continue
            visited[y] = 1
            path.append(y)
            eids.append(ei)
            go(y)
            eids.pop()
            path.pop()
            visited[y] = 0

    go(s)
    out.sort(key=lambda pe: len(pe[0]))
    return out


def naive_oracle_tpc(g: Graph, max_order: int = 5) -> int:
    """Brute-force reference value: no bounds, no cascade, no pruning.

    Enumerates colorings with k = 1, 2, ... colors (modulo color
    permutations) in a fixed vertices-then-edges element order and tests
    each complete coloring pairwise.  Deliberately independent of
    decide_k's ordering and reductions; refuses orders above `max_order`.
    """
    if g.n < 2 or not is_connected(g):
        raise ValueError("need a connected graph of order >= 2")
    if g.n > max_order:
        raise ValueError(f"oracle refuses orders above {max_order}")
    n, m = g.n, g.m
    total = n + m
    vcol = [0] * n
    ecol = [0] * m
    arrays = [vcol] * n + [ecol] * m
    slots = list(range(n)) + list(range(m))
    pairs = {
        (u, v): _all_simple_paths(g, u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not g.adj[u] >> v & 1
    }

    def passes() -> bool:
        for options in pairs.values():
            if not any(_path_ok(vcol, ecol, vs, es, False) for vs, es in options):
                return False
        return True

    def rec(i: int, maxc: int, k: int) -> bool:
        if i == total:
            return passes()
        arr = arrays[i]
        idx = slots[i]
        for c in range(1, min(k, maxc + 1) + 1):
            arr[idx] = c
            if rec(i + 1, c if c > maxc else maxc, k):
                return True
        arr[idx] = 0
        return False

    for k in range(1, total + 1):
        if rec(0, 0, k):
            return k
    raise AssertionError("unreachable: some k <= n + m always works")
