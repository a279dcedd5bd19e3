"""Parameterized graph families and their hand-built total colorings.

Builders produce fixed vertex layouts (documented per builder) so that
colorings can name vertices positionally.  Every coloring here is the
constructive witness used by the verification harness; each one is validated
by `check_total_proper_connected` in the test suite rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .coloring import TotalColoring
from .graphs import (
    Graph,
    find_hamiltonian_path,
    is_connected,
    is_tree,
    max_degree,
    relabel,
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus integer parameters, e.g. FamilySpec("cycle", (5,))."""

    kind: str
    params: tuple[int, ...] = ()


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with parts U = 0..s-1 and W = s..s+t-1."""
    if s < 1 or t < 1:
        raise ValueError("complete bipartite needs s, t >= 1")
    return Graph(s + t, [(u, s + w) for u in range(s) for w in range(t)])


def double_star(a: int, b: int) -> Graph:
    """T(a,b): centers 0 (with a-1 leaves) and 1 (with b-1 leaves), joined."""
    if a < 2 or b < 2:
        raise ValueError("double star needs a, b >= 2")
    edges = [(0, 1)]
    edges += [(0, i) for i in range(2, a + 1)]
    edges += [(1, i) for i in range(a + 1, a + b)]
    return Graph(a + b, edges)


def s4_plus_e() -> Graph:
    """Star on 4 vertices plus an edge joining two leaves: center 0, triangle 0-1-2."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def c4_plus_e() -> Graph:
    """4-cycle 0-1-2-3 plus the chord {0,2}."""
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def _pendants_at(base_edges: list[tuple[int, int]], at: int, first: int, count: int):
    return base_edges + [(at, first + i) for i in range(count)]


def h1_graph(n: int) -> Graph:
    """Triangle 0,1,2 with n-3 pendant edges at vertex 0 (leaves 3..n-1)."""
    if n < 5:
        raise ValueError("h1 needs n >= 5")
    return Graph(n, _pendants_at([(0, 1), (0, 2), (1, 2)], 0, 3, n - 3))


def h2_graph(n: int) -> Graph:
    """As h1 but with n-4 pendants at 0 and one extra pendant edge {3, n-1}.

    Vertex 3 is the shared endpoint: the unique vertex at distance 2 from 0
    through a bridge.
    """
    if n < 5:
        raise ValueError("h2 needs n >= 5")
    edges = _pendants_at([(0, 1), (0, 2), (1, 2)], 0, 3, n - 4)
    edges.append((3, n - 1))
    return Graph(n, edges)


def h3_graph(n: int) -> Graph:
    """As h1 but with n-4 pendants at 0 and one pendant edge {1, n-1} at vertex 1."""
    if n < 5:
        raise ValueError("h3 needs n >= 5")
    edges = _pendants_at([(0, 1), (0, 2), (1, 2)], 0, 3, n - 4)
    edges.append((1, n - 1))
    return Graph(n, edges)


def h4_graph(n: int) -> Graph:
    """4-cycle 0,1,2,3 with n-4 pendant edges at vertex 0 (leaves 4..n-1)."""
    if n < 5:
        raise ValueError("h4 needs n >= 5")
    return Graph(n, _pendants_at([(0, 1), (1, 2), (2, 3), (0, 3)], 0, 4, n - 4))


def kst_plus_v(s: int, t: int, attachment: Iterable[int]) -> Graph:
    """K_{s,t} (labels as complete_bipartite) plus vertex s+t joined to `attachment`."""
    att = sorted(set(attachment))
    if s < 1 or t < 1:
        raise ValueError("kst-plus-v needs s, t >= 1")
    if not att:
        raise ValueError("attachment must be nonempty")
    if any(not 0 <= a < s + t for a in att):
        raise ValueError(f"attachment vertices must lie in 0..{s + t - 1}")
    g = complete_bipartite(s, t)
    return Graph(s + t + 1, g.edges + tuple((a, s + t) for a in att))


def h_prime_graph(s: int) -> Graph:
    """K_{s,2} plus pendant vertices s+2 at w1 = s and s+3 at w2 = s+1."""
    if s < 2:
        raise ValueError("h-prime needs s >= 2")
    g = complete_bipartite(s, 2)
    return Graph(s + 4, g.edges + ((s, s + 2), (s + 1, s + 3)))


def theorem6_graph(n: int) -> Graph:
    """Order-n graph whose complement pairs with it at total sum 6.

    Vertex 0 is joined to all of U = 1..p (p = floor((n-1)/2)); W = p+1..n-1
    is a clique; u_i is joined to the floor((n-3)/4)+1 cyclically consecutive
    W-vertices starting at w_i.
    """
    if n < 4:
        raise ValueError("thm6 needs n >= 4")
    p = (n - 1) // 2
    q = n - 1 - p
    edges = [(0, i) for i in range(1, p + 1)]
    edges += [(p + a, p + b) for a, b in combinations(range(1, q + 1), 2)]
    width = (n - 3) // 4
    for i in range(1, p + 1):
        for off in range(width + 1):
            j = (i - 1 + off) % q + 1
            edges.append((i, p + j))
    return Graph(n, edges)


_FAMILIES: dict[str, tuple[Callable[..., Graph], int, int | None]] = {
    # name -> (builder, min params, max params or None for variadic)
    "path": (path_graph, 1, 1),
    "cycle": (cycle_graph, 1, 1),
    "star": (star_graph, 1, 1),
    "complete": (complete_graph, 1, 1),
    "kst": (complete_bipartite, 2, 2),
    "double-star": (double_star, 2, 2),
    "s4e": (s4_plus_e, 0, 0),
    "c4e": (c4_plus_e, 0, 0),
    "h1": (h1_graph, 1, 1),
    "h2": (h2_graph, 1, 1),
    "h3": (h3_graph, 1, 1),
    "h4": (h4_graph, 1, 1),
    "kst-plus-v": (lambda s, t, *att: kst_plus_v(s, t, att), 3, None),
    "h-prime": (h_prime_graph, 1, 1),
    "thm6": (theorem6_graph, 1, 1),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph described by a FamilySpec; bad specs raise ValueError."""
    if spec.kind not in _FAMILIES:
        raise ValueError(f"unknown family {spec.kind!r}; known: {', '.join(family_names())}")
    builder, lo, hi = _FAMILIES[spec.kind]
    k = len(spec.params)
    if k < lo or (hi is not None and k > hi):
        want = f"{lo}" if hi == lo else f"{lo}+" if hi is None else f"{lo}..{hi}"
        raise ValueError(f"family {spec.kind!r} takes {want} parameters, got {k}")
    return builder(*spec.params)


def color_tree(t: Graph) -> TotalColoring:
    """Proper total coloring of a tree with exactly max_degree + 1 colors.

    Greedy over BFS order from vertex 0, each element taking the smallest
    color absent from its already-colored neighbours and incident elements.
    At the moment an element is colored it has at most max_degree competing
    colors, and the star at a maximum-degree vertex forces all of them, so
    the palette is exactly max_degree + 1.
    """
    if not is_tree(t) or t.n < 3:
        raise ValueError("need a tree on at least 3 vertices")
    dmax = max_degree(t)
    vc = [0] * t.n
    ec = {e: 0 for e in t.edges}

    def smallest_free(banned: set[int]) -> int:
        c = 1
        while c in banned:
            c += 1
        return c

    def edge_ban(u: int, v: int) -> set[int]:
        banned = {vc[u], vc[v]}
        for x in (u, v):
            for _, ei in t.inc[x]:
                banned.add(ec[t.edges[ei]])
        return banned

    vc[0] = 1
    seen = {0}
    queue = [0]
    while queue:
        p = queue.pop(0)
        for w in t.neighbors(p):
            if w in seen:
                continue
            seen.add(w)
            e = (p, w) if p < w else (w, p)
            ec[e] = smallest_free(edge_ban(p, w))
            vc[w] = smallest_free({vc[x] for x in t.neighbors(w)} | {ec[e]})
            queue.append(w)

    out = TotalColoring(t.n, vc, ec)
    assert out.num_colors() == dmax + 1
    return out


def color_traceable(g: Graph, ham: Iterable[int]) -> TotalColoring:
    """Cycle colors 1,2,3 along a Hamiltonian path; off-path edges get 1.

    Along the alternating vertex/edge sequence of the path, element number i
    (0-based) receives (i mod 3) + 1, so any three consecutive elements use
    three distinct colors and every subpath of the Hamiltonian path is
    total-proper.
    """
    seq = tuple(ham)
    if sorted(seq) != list(range(g.n)):
        raise ValueError("not a permutation of the vertices")
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge; not a Hamiltonian path")
    vc = [0] * g.n
    ec = {e: 1 for e in g.edges}
    for i, v in enumerate(seq):
        vc[v] = (2 * i) % 3 + 1
    for i, (a, b) in enumerate(zip(seq, seq[1:])):
        ec[(a, b) if a < b else (b, a)] = (2 * i + 1) % 3 + 1
    return TotalColoring(g.n, vc, ec)


def _role_coloring(
    g: Graph,
    role: dict[int, int],
    vc_rule: dict[int, int],
    ec_rule: dict[tuple[int, int], int],
    default: int,
) -> TotalColoring:
    # pull a role-labelled rule back through the relabelling `role`
    vc = [vc_rule.get(role[x], default) for x in range(g.n)]
    ec = {}
    for x, y in g.edges:
        a, b = role[x], role[y]
        ec[(x, y)] = ec_rule.get((a, b) if a < b else (b, a), default)
    return TotalColoring(g.n, vc, ec)


def _c6_with_connected_rest(g: Graph, s: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    # 3 U-vertices and 3 W-vertices whose removal leaves the rest connected
    rest_all = [x for x in range(g.n)]
    for us in combinations(range(s), 3):
        for ws in combinations(range(s, s + t), 3):
            dropped = set(us) | set(ws)
            keep = [x for x in rest_all if x not in dropped]
            index = {x: i for i, x in enumerate(keep)}
            sub = Graph(
                len(keep),
                [
                    (index[a], index[b])
                    for a, b in g.edges
                    if a in index and b in index
                ],
            )
            if sub.n > 0 and is_connected(sub):
                return us, ws
    return None


def color_bipartite_plus_vertex(
    s: int, t: int, attachment: Iterable[int] | str
) -> tuple[Graph, TotalColoring]:
    """K_{s,t} plus an attached vertex, colored with exactly 3 colors.

    `attachment` lists K_{s,t} vertices the new vertex joins (labels as in
    complete_bipartite), or is one of the tags "w" (join w1), "u" (join u1),
    "h-prime" (t = 2 only: two pendant vertices, one per W-vertex).
    Requires s >= t >= 2.
    """
    if not s >= t >= 2:
        raise ValueError("need s >= t >= 2")

    if attachment == "h-prime":
        if t != 2:
            raise ValueError("h-prime exists only for t = 2")
        g = h_prime_graph(s)
        role = {x: x for x in range(g.n)}
        return g, _role_coloring(
            g,
            role,
            {s: 1, s + 1: 2},
            {(0, s + 1): 1, (0, s): 2},
            3,
        )

    if attachment == "w":
        neighbors: tuple[int, ...] = (s,)
    elif attachment == "u":
        neighbors = (0,)
    elif isinstance(attachment, str):
        raise ValueError(f"unknown attachment tag {attachment!r}")
    else:
        neighbors = tuple(sorted(set(attachment)))
    g = kst_plus_v(s, t, neighbors)
    v = s + t
    role = {x: x for x in range(g.n)}

    def pin(slot: int, wanted: int) -> None:
        # hand role `slot` to original vertex `wanted` (same-side swap)
        cur = next(x for x, r in role.items() if r == slot)
        if cur != wanted:
            role[cur], role[wanted] = role[wanted], role[cur]

    w_neighbors = [x for x in neighbors if x >= s]
    u_neighbors = [x for x in neighbors if x < s]

    if t == 2:
        if w_neighbors:
            # v reaches W: w1 must be a neighbour of v
            pin(s, w_neighbors[0])
            return g, _role_coloring(
                g,
                role,
                {s: 1, s + 1: 2},
                {(0, s + 1): 1, (0, s): 2},
                3,
            )
        # v reaches only U: u1 a neighbour of v, u2 any other U-vertex
        pin(0, u_neighbors[0])
        return g, _role_coloring(
            g,
            role,
            {s: 1, 1: 1, s + 1: 2},
            {(0, s + 1): 1, (0, s): 2, (1, s): 2, (0, v): 2},
            3,
        )

    if s == t == 3:
        search = find_hamiltonian_path(g)
        assert search.status == "found"
        return g, color_traceable(g, search.path)

    choice = _c6_with_connected_rest(g, s, t)
    if choice is not None:
        # move the chosen 6-cycle into role slots u1,u2,u3 / w1,w2,w3
        for slot, x in zip((0, 1, 2), choice[0]):
            pin(slot, x)
        for slot, x in zip((s, s + 1, s + 2), choice[1]):
            pin(slot, x)
    elif u_neighbors:
        # only reachable with t = 3 and s >= 4: route pairs through a
        # v-neighbour sitting outside the fixed 6-cycle
        pin(3, u_neighbors[0])
    elif t >= 4:
        pin(s + 3, w_neighbors[0])
    else:
        # v sees only W and t = 3: w2 must be a neighbour of v
        pin(s + 1, w_neighbors[0])

    u1, u2, u3 = 0, 1, 2
    w1, w2, w3 = s, s + 1, s + 2
    vc_rule = {u1: 1, w2: 1, u2: 2, w3: 2, w1: 3, u3: 3}
    ec_rule = {
        _norm(w1, u2): 1,
        _norm(u3, w3): 1,
        _norm(u1, w1): 2,
        _norm(w2, u3): 2,
        _norm(u2, w2): 3,
        _norm(w3, u1): 3,
    }
    for i in range(3, s):
        vc_rule[i] = 1
        ec_rule[_norm(w1, i)] = 2
    for j in range(s + 3, s + t):
        vc_rule[j] = 2
        ec_rule[_norm(u3, j)] = 1
    return g, _role_coloring(g, role, vc_rule, ec_rule, 3)


def _relabel_coloring(
    g: Graph, coloring: TotalColoring, perm: list[int]
) -> tuple[Graph, TotalColoring]:
    # push a coloring through a relabelling, old label v -> perm[v]
    h = relabel(g, perm)
    vcol = [0] * g.n
    for v in range(g.n):
        vcol[perm[v]] = coloring.vertex_color(v)
    ecol = {
        _norm(perm[u], perm[v]): coloring.edge_color(u, v) for u, v in g.edges
    }
    return h, TotalColoring(g.n, vcol, ecol)


def color_complete_bipartite(s: int, t: int) -> tuple[Graph, TotalColoring]:
    """K_{s,t} (labels as in complete_bipartite) colored with 3 colors.

    Grows the graph out of a one-smaller complete bipartite graph plus an
    attached vertex: joining the new vertex to all of U makes it a W-vertex,
    and for t = 2 joining it to both W-vertices makes it a U-vertex (then
    relabelled back to the standard layout).  Requires s >= t >= 2 and
    s + t >= 5; K_{2,2} is a cycle, colorable by traceability instead.
    """
    if not s >= t >= 2:
        raise ValueError("need s >= t >= 2")
    if s + t < 5:
        raise ValueError("need s + t >= 5")
    if t >= 3:
        g, coloring = color_bipartite_plus_vertex(s, t - 1, tuple(range(s)))
        assert g == complete_bipartite(s, t)
        return g, coloring
    g, coloring = color_bipartite_plus_vertex(s - 1, 2, (s - 1, s))
    # old layout: U = 0..s-2, W = {s-1, s}, new vertex s+1 joined to W
    perm = list(range(s - 1)) + [s, s + 1, s - 1]
    h, moved = _relabel_coloring(g, coloring, perm)
    assert h == complete_bipartite(s, t)
    return h, moved


def _norm(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def color_h_family(variant: str, n: int) -> tuple[Graph, TotalColoring]:
    """Minimum-palette colorings of the near-tree families h1..h4.

    h1 uses n-2 colors (n >= 5); h2, h3, h4 use n-3 colors (n >= 6 for h2,
    n >= 7 for h3 and h4; below those orders the graphs are handled by
    traceability or direct search instead of a fixed rule).
    """
    if variant == "h1":
        if n < 5:
            raise ValueError("h1 coloring needs n >= 5")
        g = h1_graph(n)
        vc = {0: 1, 2: 2, 1: 3}
        ec = {(1, 2): 1, (0, 1): 2, (0, 2): 3}
        for j in range(1, n - 2):
            ec[(0, j + 2)] = j + 1
        return g, _fill(g, vc, ec, 1)
    if variant == "h2":
        if n < 6:
            raise ValueError("h2 coloring needs n >= 6")
        g = h2_graph(n)
        vc = {0: 1, 2: 2, 1: 3, 3: 3}
        ec = {(1, 2): 1, (0, 1): 2, (0, 2): 3, (3, n - 1): 1}
        for j in range(1, n - 3):
            ec[(0, j + 2)] = j + 1
        return g, _fill(g, vc, ec, 1)
    if variant == "h3":
        if n < 7:
            raise ValueError("h3 coloring needs n >= 7")
        g = h3_graph(n)
        vc = {0: 1, 2: 2, 1: 3}
        ec = {(1, 2): 1, (0, 1): 2, (0, 2): 3, (1, n - 1): 4}
        for j in range(1, n - 3):
            ec[(0, j + 2)] = j + 1
        return g, _fill(g, vc, ec, 1)
    if variant == "h4":
        if n < 7:
            raise ValueError("h4 coloring needs n >= 7")
        g = h4_graph(n)
        vc = {0: n - 3, 1: 2, 3: 2, 2: 4}
        ec = {(1, 2): 3, (0, 3): 3}
        for j in range(1, n - 3):
            ec[(0, j + 3)] = j
        return g, _fill(g, vc, ec, 1)
    raise ValueError(f"unknown variant {variant!r}; expected h1..h4")


def _fill(g: Graph, vc: dict[int, int], ec: dict[tuple[int, int], int], default: int) -> TotalColoring:
    vcols = [vc.get(x, default) for x in range(g.n)]
    ecols = {e: ec.get(e, default) for e in g.edges}
    return TotalColoring(g.n, vcols, ecols)
