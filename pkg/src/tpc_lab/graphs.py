"""Small simple-graph toolkit.

Dense vertex labels 0..n-1, adjacency kept as per-vertex bitsets.  Aimed at
desk-scale orders: storage and graph6 I/O up to n = 62, exact canonical forms
up to n = 10, isomorph-free enumeration up to n = 8 (trees up to n = 10).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

MAX_GRAPH6_N = 62
MAX_CANONICAL_N = 10
MAX_ENUM_N = 8
MAX_TREE_ENUM_N = 10


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    `edges` is a sorted tuple of (u, v) pairs with u < v.  `adj[v]` is the
    neighbourhood of v as a bitmask, `inc[v]` the sorted tuple of
    (neighbour, edge_index) pairs used by path searches.
    """

    __slots__ = ("n", "edges", "adj", "inc", "_eid", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_GRAPH6_N:
            raise ValueError(f"order must be between 0 and {MAX_GRAPH6_N}, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        adj = [0] * n
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for ei, (u, v) in enumerate(self.edges):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            inc[u].append((v, ei))
            inc[v].append((u, ei))
        self.adj = tuple(adj)
        self.inc = tuple(tuple(sorted(row)) for row in inc)
        self._eid = {e: i for i, e in enumerate(self.edges)}
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge (u, v) in `edges`; raises KeyError if absent."""
        return self._eid[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.inc[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def is_complete(g: Graph) -> bool:
    return 2 * g.m == g.n * (g.n - 1)


def complement(g: Graph) -> Graph:
    """Complement on the same labels."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adj[u] >> v & 1
    ]
    return Graph(g.n, edges)


def relabel(g: Graph, new_label: Iterable[int]) -> Graph:
    """Apply the permutation v -> new_label[v] to the vertex set."""
    lab = tuple(new_label)
    if sorted(lab) != list(range(g.n)):
        raise ValueError("new_label must be a permutation of 0..n-1")
    return Graph(g.n, [(lab[u], lab[v]) for u, v in g.edges])


def _component_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = [start]
    while frontier:
        v = frontier.pop()
        fresh = g.adj[v] & ~seen
        while fresh:
            low = fresh & -fresh
            fresh ^= low
            seen |= low
            frontier.append(low.bit_length() - 1)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity of the empty graph is undefined here")
    return _component_mask(g, 0) == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bridges(g: Graph) -> tuple[tuple[int, int], ...]:
    """All cut edges, found by one DFS with low-links."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[tuple[int, int]] = []
    timer = 0

    def dfs(v: int, parent_edge: int) -> None:
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        for w, ei in g.inc[v]:
            if ei == parent_edge:
                continue
            if disc[w] == -1:
                dfs(w, ei)
                low[v] = min(low[v], low[w])
                if low[w] > disc[v]:
                    out.append(g.edges[ei])
            else:
                low[v] = min(low[v], disc[w])

    for v in range(g.n):
        if disc[v] == -1:
            dfs(v, -1)
    return tuple(sorted(out))


def max_bridge_degree(g: Graph) -> int:
    """Largest number of cut edges meeting at one vertex."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    count = [0] * g.n
    for u, v in bridges(g):
        count[u] += 1
        count[v] += 1
    return max(count, default=0)


def cut_vertices(g: Graph) -> tuple[int, ...]:
    disc = [-1] * g.n
    low = [0] * g.n
    cut = [False] * g.n
    timer = 0

    def dfs(v: int, parent: int) -> None:
        nonlocal timer
        disc[v] = low[v] = timer
        timer += 1
        children = 0
        for w, _ in g.inc[v]:
            if disc[w] == -1:
                children += 1
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if parent != -1 and low[w] >= disc[v]:
                    cut[v] = True
            elif w != parent:
                low[v] = min(low[v], disc[w])
        if parent == -1 and children >= 2:
            cut[v] = True

    for v in range(g.n):
        if disc[v] == -1:
            dfs(v, -1)
    return tuple(v for v in range(g.n) if cut[v])


def is_two_connected(g: Graph) -> bool:
    """n >= 3, connected, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


@dataclass(frozen=True)
class HamiltonianSearch:
    """Outcome of a Hamiltonian-path search.

    status is "found" (path holds a witness), "none" (exhaustive proof that
    no Hamiltonian path exists), or "budget" (step limit hit first).
    """

    status: str
    path: tuple[int, ...] | None
    steps: int


def find_hamiltonian_path(
    g: Graph, step_budget: int | None = None
) -> HamiltonianSearch:
    """Backtracking search for a Hamiltonian path, low-degree vertices first."""
    if g.n == 0:
        raise ValueError("empty graph")
    if g.n == 1:
        return HamiltonianSearch("found", (0,), 0)
    if not is_connected(g):
        return HamiltonianSearch("none", None, 0)

    by_degree = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    order = {v: sorted(g.neighbors(v), key=lambda w: (g.degree(w), w)) for v in range(g.n)}
    full = (1 << g.n) - 1
    steps = 0
    path: list[int] = []

    def extend(v: int, visited: int) -> bool:
        nonlocal steps
        steps += 1
        if step_budget is not None and steps > step_budget:
            raise _Budget
        path.append(v)
        visited |= 1 << v
        if visited == full:
            return True
        for w in order[v]:
            if not visited >> w & 1 and extend(w, visited):
                return True
        path.pop()
        return False

    try:
        for start in by_degree:
            if extend(start, 0):
                return HamiltonianSearch("found", tuple(path), steps)
    except _Budget:
        return HamiltonianSearch("budget", None, steps)
    return HamiltonianSearch("none", None, steps)


class _Budget(Exception):
    pass


def low_degree_spanning_tree(g: Graph) -> Graph:
    """Spanning tree biased toward low maximum degree.

    BFS tree seed, then local edge swaps: a non-tree edge replaces a tree
    edge at a maximum-degree vertex on its fundamental cycle whenever the
    swap cannot create a new vertex of the current maximum degree.  Each
    swap lowers (max degree, #vertices at max), so the loop terminates.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    tree: set[tuple[int, int]] = set()
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop(0)
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                tree.add((v, w) if v < w else (w, v))
                queue.append(w)

    def tree_path(a: int, b: int, edges: set[tuple[int, int]]) -> list[int]:
        nbr: dict[int, list[int]] = {v: [] for v in range(g.n)}
        for u, v in edges:
            nbr[u].append(v)
            nbr[v].append(u)
        prev = {a: -1}
        queue = [a]
        while queue:
            v = queue.pop(0)
            if v == b:
                break
            for w in nbr[v]:
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        out = [b]
        while out[-1] != a:
            out.append(prev[out[-1]])
        return out[::-1]

    while True:
        deg = [0] * g.n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        dmax = max(deg)
        improved = False
        for u, v in g.edges:
            if (u, v) in tree or deg[u] + 1 >= dmax or deg[v] + 1 >= dmax:
                continue
            cycle = tree_path(u, v, tree)
            for i, w in enumerate(cycle):
                if deg[w] == dmax:
                    # drop the cycle edge on w's u-side
                    a, b = cycle[i - 1], w
                    tree.discard((a, b) if a < b else (b, a))
                    tree.add((u, v))
                    improved = True
                    break
            if improved:
                break
        if not improved:
            return Graph(g.n, tree)


def _min_placement(g: Graph) -> list[int]:
    # Branch-and-bound over vertex placements minimising the column-major
    # upper-triangle adjacency bit string.  placement[i] = vertex at slot i;
    # cols[i] holds slot i's column (adjacency to slots 0..i-1, top bit
    # first), so lexicographic list comparison matches bit-string order.
    n, adj = g.n, g.adj
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    placed: list[int] = []
    cols: list[int] = []
    unplaced = (1 << n) - 1

    def rec() -> None:
        nonlocal best_cols, best_perm, unplaced
        pos = len(placed)
        if pos == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_perm = placed.copy()
            return
        cands = []
        rest = unplaced
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            col = 0
            av = adj[v]
            for u in placed:
                col = col << 1 | (av >> u & 1)
            cands.append((col, v))
        cands.sort()
        kept: list[int] = []
        for col, v in cands:
            # skip v when swapping it with an already-tried twin is an
            # automorphism: identical adjacency outside {u, v}
            av = adj[v]
            if any(
                (adj[u] ^ av) & ~(1 << u) & ~(1 << v) == 0 for u in kept
            ):
                continue
            kept.append(v)
            if best_cols is not None:
                # recompare the whole prefix: best_cols may have shrunk
                # during this loop, which restores equality on the stack
                i = 0
                while i < pos and cols[i] == best_cols[i]:
                    i += 1
                if i == pos:
                    if col > best_cols[pos]:
                        break  # candidates are sorted, the rest only grow
                elif cols[i] > best_cols[i]:
                    return  # whole node beaten, cannot happen for ancestors
            placed.append(v)
            cols.append(col)
            unplaced ^= 1 << v
            rec()
            unplaced ^= 1 << v
            cols.pop()
            placed.pop()

    rec()
    assert best_perm is not None
    return best_perm


def canonical_form(g: Graph) -> Graph:
    """Canonical representative of g's isomorphism class."""
    if g.n > MAX_CANONICAL_N:
        raise ValueError(f"canonical form supported up to n = {MAX_CANONICAL_N}")
    placement = _min_placement(g)
    new_label = [0] * g.n
    for slot, v in enumerate(placement):
        new_label[v] = slot
    return relabel(g, new_label)


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant key: graph6 bytes of the canonical form."""
    return to_graph6(canonical_form(g)).encode("ascii")


@functools.lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    reps: dict[bytes, Graph] = {}
    for h in _connected_classes(n - 1):
        # every connected graph has a non-cut vertex, so growing each class
        # by one vertex with a nonempty neighbourhood reaches all classes
        for mask in range(1, 1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            g = canonical_form(Graph(n, h.edges + tuple(extra)))
            reps.setdefault(to_graph6(g).encode("ascii"), g)
    return tuple(reps[c] for c in sorted(reps))


def enumerate_connected_graphs(
    n: int, predicate: Callable[[Graph], bool] | None = None
) -> Iterator[Graph]:
    """One canonical representative per connected isomorphism class of order n,
    in canonical-code order, optionally filtered."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supported for 1 <= n <= {MAX_ENUM_N}")
    for g in _connected_classes(n):
        if predicate is None or predicate(g):
            yield g


def _tree_code(g: Graph) -> tuple[str, ...]:
    # Complete isomorphism invariant for trees, far cheaper than the general
    # branch-and-bound: rooted encodings at the (at most two) center vertices.
    # Any isomorphism maps centers to centers, and equal rooted encodings
    # characterise rooted tree isomorphism, so the sorted tuple is exact.
    n = g.n
    degree = [g.adj[v].bit_count() for v in range(n)]
    gone = [False] * n
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        for v in layer:
            gone[v] = True
        nxt = []
        for v in layer:
            for u in g.neighbors(v):
                if not gone[u]:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt

    def enc(v: int, parent: int) -> str:
        parts = sorted(enc(u, v) for u in g.neighbors(v) if u != parent)
        return "(" + "".join(parts) + ")"

    return tuple(sorted(enc(c, -1) for c in layer))


@functools.lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    reps: dict[tuple[str, ...], Graph] = {}
    for t in _tree_classes(n - 1):
        for v in range(n - 1):
            g = Graph(n, t.edges + ((v, n - 1),))
            reps.setdefault(_tree_code(g), g)
    return tuple(reps[c] for c in sorted(reps))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per tree isomorphism class of order n (n <= 10)."""
    if not 1 <= n <= MAX_TREE_ENUM_N:
        raise ValueError(f"tree enumeration supported for 1 <= n <= {MAX_TREE_ENUM_N}")
    yield from _tree_classes(n)


def to_graph6(g: Graph) -> str:
    """graph6 encoding (single size byte, so order <= 62)."""
    if g.n > MAX_GRAPH6_N:
        raise ValueError(f"graph6 writing supported up to n = {MAX_GRAPH6_N}")
    bits: list[int] = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = word << 1 | b
        out.append(chr(63 + word))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; malformed input raises ValueError."""
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if n < 0 or any(not 63 <= ord(ch) <= 126 for ch in s):
        raise ValueError(f"invalid graph6 character in {text!r}")
    if n > MAX_GRAPH6_N:
        raise ValueError(f"graph6 orders above {MAX_GRAPH6_N} not supported")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(s) - 1 != expect:
        raise ValueError(
            f"graph6 body length {len(s) - 1}, expected {expect} for order {n}"
        )
    bits: list[int] = []
    for ch in s[1:]:
        word = ord(ch) - 63
        bits.extend(word >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError(f"nonzero padding bits in {text!r}")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def read_graph6_file(path: str) -> list[Graph]:
    """Parse a file with one graph6 string per line; blank lines are skipped."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_graph6(line))
    return out
