"""Total colorings and total-proper path machinery.

A total coloring assigns positive integer colors to every vertex and every
edge; color 0 marks an element left unassigned.  A path is total-proper when
consecutive edges differ, consecutive internal vertices differ, and every
internal vertex differs from both path edges at it.  Endpoint vertex colors
are never constrained.

All predicates accept `wildcard=True`, under which comparisons involving an
unassigned element (color 0) never count as a conflict.  That makes the
checks optimistic on partial colorings: any full coloring extending a
failing partial one also fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph


class TotalColoring:
    """Immutable color assignment on the vertices and edges of an order-n graph."""

    __slots__ = ("n", "vertex_colors", "edge_colors")

    def __init__(
        self,
        n: int,
        vertex_colors: tuple[int, ...] | list[int],
        edge_colors: dict[tuple[int, int], int],
    ) -> None:
        vc = tuple(vertex_colors)
        if len(vc) != n:
            raise ValueError(f"expected {n} vertex colors, got {len(vc)}")
        ec: dict[tuple[int, int], int] = {}
        for (u, v), c in edge_colors.items():
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for order {n}")
            ec[(u, v) if u < v else (v, u)] = c
        if any(c < 0 for c in vc) or any(c < 0 for c in ec.values()):
            raise ValueError("colors must be nonnegative (0 = unassigned)")
        self.n = n
        self.vertex_colors = vc
        self.edge_colors = ec

    def vertex_color(self, v: int) -> int:
        return self.vertex_colors[v]

    def edge_color(self, u: int, v: int) -> int:
        return self.edge_colors[(u, v) if u < v else (v, u)]

    def palette(self) -> frozenset[int]:
        """Set of assigned colors (0 excluded)."""
        used = set(self.vertex_colors) | set(self.edge_colors.values())
        used.discard(0)
        return frozenset(used)

    def num_colors(self) -> int:
        return len(self.palette())

    def is_fully_assigned(self) -> bool:
        return 0 not in self.vertex_colors and 0 not in self.edge_colors.values()

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "vertex_colors": list(self.vertex_colors),
            "edge_colors": [[u, v, c] for (u, v), c in sorted(self.edge_colors.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TotalColoring":
        try:
            n = data["n"]
            vc = data["vertex_colors"]
            ec = {(u, v): c for u, v, c in data["edge_colors"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coloring document: {exc}") from exc
        return cls(n, vc, ec)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TotalColoring)
            and self.n == other.n
            and self.vertex_colors == other.vertex_colors
            and self.edge_colors == other.edge_colors
        )

    def __repr__(self) -> str:
        return (
            f"TotalColoring(n={self.n}, vertex_colors={list(self.vertex_colors)}, "
            f"edge_colors={dict(sorted(self.edge_colors.items()))})"
        )


def validate_coloring(g: Graph, c: TotalColoring) -> None:
    """Raise ValueError unless c's domain is exactly V(g) plus E(g)."""
    if c.n != g.n:
        raise ValueError(f"coloring is for order {c.n}, graph has order {g.n}")
    if set(c.edge_colors) != set(g.edges):
        raise ValueError("coloring edge domain does not match the graph")


@dataclass(frozen=True)
class PathEndpointView:
    """First/last edge colors and the near-endpoint internal vertex colors of a path.

    For a single-edge path u..v the first and last edge coincide, start_v is
    the color of v and end_v the color of u, matching the convention that the
    'second' vertex seen from an endpoint is the opposite endpoint.
    """

    start_e: int
    end_e: int
    start_v: int
    end_v: int


@dataclass(frozen=True)
class ConnectivityCheck:
    ok: bool
    witnesses: dict[tuple[int, int], tuple[int, ...]] | None
    failing_pair: tuple[int, int] | None


def _flat(g: Graph, c: TotalColoring) -> tuple[list[int], list[int]]:
    validate_coloring(g, c)
    return list(c.vertex_colors), [c.edge_colors[e] for e in g.edges]


def _path_ok(
    vcol: list[int], ecol: list[int], vseq, eids, wc: bool
) -> bool:
    # vseq: path vertices, eids: edge indices, len(eids) = len(vseq) - 1
    k = len(eids)
    for i in range(1, k):
        a = ecol[eids[i - 1]]
        b = ecol[eids[i]]
        if a == b and (a or not wc):
            return False
        x = vcol[vseq[i]]
        if (x == a or x == b) and (x or not wc):
            return False
    for i in range(1, k - 1):
        a = vcol[vseq[i]]
        b = vcol[vseq[i + 1]]
        if a == b and (a or not wc):
            return False
    return True


def _find_path(
    inc,
    vcol: list[int],
    ecol: list[int],
    s: int,
    t: int,
    wc: bool,
    palette: int | None = None,
) -> tuple[int, ...] | None:
    # first total-proper s..t path in DFS order, neighbours ascending.
    # `palette` (when given) is the number of colors available: an internal
    # vertex forces 3 distinct colors onto itself and its two path edges, so
    # under fewer than 3 colors only single-edge paths can ever work,
    # whatever the wildcards are
    visited = bytearray(len(vcol))
    visited[s] = 1
    path = [s]
    no_internal = palette is not None and palette < 3

    def go(x: int, ie: int, pv: int) -> bool:
        # ie: color of the edge into x (-1 at the start), pv: color of the
        # vertex before x when that vertex is internal, else -1
        vx = vcol[x]
        if ie != -1:
            if no_internal:
                return False
            if vx == ie and (vx or not wc):
                return False
            if vx == pv and (vx or not wc):
                return False
        for y, ei in inc[x]:
            if visited[y]:
                continue
            ne = ecol[ei]
            if ie != -1:
                if ne == ie and (ne or not wc):
                    continue
                if vx == ne and (vx or not wc):
                    continue
            if y == t:
                path.append(y)
                return True
            visited[y] = 1
            path.append(y)
            if go(y, ne, vx if ie != -1 else -1):
                return True
            path.pop()
            visited[y] = 0
        return False

    if go(s, -1, -1):
        return tuple(path)
    return None


def _iter_paths(
    inc, vcol: list[int], ecol: list[int], s: int, t: int, wc: bool
) -> Iterator[tuple[int, ...]]:
    # all total-proper s..t paths, same order as _find_path
    visited = bytearray(len(vcol))
    visited[s] = 1
    path = [s]

    def go(x: int, ie: int, pv: int) -> Iterator[tuple[int, ...]]:
        vx = vcol[x]
        if ie != -1:
            if vx == ie and (vx or not wc):
                return
            if vx == pv and (vx or not wc):
                return
        for y, ei in inc[x]:
            if visited[y]:
                continue
            ne = ecol[ei]
            if ie != -1:
                if ne == ie and (ne or not wc):
                    continue
                if vx == ne and (vx or not wc):
                    continue
            if y == t:
                yield tuple(path) + (y,)
                continue
            visited[y] = 1
            path.append(y)
            yield from go(y, ne, vx if ie != -1 else -1)
            path.pop()
            visited[y] = 0

    yield from go(s, -1, -1)


def _as_simple_path(g: Graph, path) -> tuple[tuple[int, ...], list[int]]:
    vseq = tuple(path)
    if len(vseq) == 0:
        raise ValueError("empty vertex sequence")
    if len(set(vseq)) != len(vseq):
        raise ValueError("path repeats a vertex")
    eids = []
    for a, b in zip(vseq, vseq[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge")
        eids.append(g.edge_id(a, b))
    return vseq, eids


def is_total_proper_path(
    g: Graph, c: TotalColoring, path, wildcard: bool = False
) -> bool:
    """True when the given simple path satisfies all three path conditions."""
    vcol, ecol = _flat(g, c)
    vseq, eids = _as_simple_path(g, path)
    return _path_ok(vcol, ecol, vseq, eids, wildcard)


def find_total_proper_path(
    g: Graph, c: TotalColoring, u: int, v: int, wildcard: bool = False
) -> tuple[int, ...] | None:
    """First total-proper u..v path in ascending-neighbour DFS order, or None."""
    if u == v:
        raise ValueError("endpoints must differ")
    vcol, ecol = _flat(g, c)
    return _find_path(g.inc, vcol, ecol, u, v, wildcard)


def iter_total_proper_paths(
    g: Graph, c: TotalColoring, u: int, v: int, wildcard: bool = False
) -> Iterator[tuple[int, ...]]:
    """All total-proper u..v paths, deterministically ordered."""
    if u == v:
        raise ValueError("endpoints must differ")
    vcol, ecol = _flat(g, c)
    return _iter_paths(g.inc, vcol, ecol, u, v, wildcard)


def check_total_proper_connected(
    g: Graph, c: TotalColoring, wildcard: bool = False
) -> ConnectivityCheck:
    """Search a total-proper path for every vertex pair.

    Returns witnesses for all pairs on success, or the first failing pair in
    index order.  Adjacent pairs are witnessed by their edge: one-edge paths
    have no internal vertex, so they are always total-proper.
    """
    vcol, ecol = _flat(g, c)
    witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                witnesses[(u, v)] = (u, v)
                continue
            path = _find_path(g.inc, vcol, ecol, u, v, wildcard)
            if path is None:
                return ConnectivityCheck(False, None, (u, v))
            witnesses[(u, v)] = path
    return ConnectivityCheck(True, witnesses, None)


def endpoint_view(c: TotalColoring, path) -> PathEndpointView:
    """Endpoint data of a path under c (see PathEndpointView for the 1-edge case)."""
    vseq = tuple(path)
    if len(vseq) < 2:
        raise ValueError("need at least two vertices")
    return PathEndpointView(
        start_e=c.edge_color(vseq[0], vseq[1]),
        end_e=c.edge_color(vseq[-2], vseq[-1]),
        start_v=c.vertex_color(vseq[1]),
        end_v=c.vertex_color(vseq[-2]),
    )


def has_strong_property(g: Graph, c: TotalColoring) -> bool:
    """Every pair must have two total-proper paths whose endpoint data spreads colors.

    For u, v there must be paths P1, P2 such that the vertex after u on each
    Pi is not colored c(u), the vertex before v is not colored c(v), and both
    {c(u), first edge of P1, first edge of P2} and {c(v), last edge of P1,
    last edge of P2} contain three distinct colors.  P1 = P2 never qualifies,
    since a repeated first edge collapses the first triple.
    """
    vcol, ecol = _flat(g, c)
    if not c.is_fully_assigned():
        raise ValueError("strong check needs a fully assigned coloring")
    base = check_total_proper_connected(g, c)
    if not base.ok:
        raise ValueError("strong check needs a total-proper connected coloring")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cu, cv = vcol[u], vcol[v]
            sigs: list[tuple[int, int]] = []
            found = False
            for path in _iter_paths(g.inc, vcol, ecol, u, v, False):
                a = ecol[g.edge_id(path[0], path[1])]
                b = ecol[g.edge_id(path[-2], path[-1])]
                if vcol[path[1]] == cu or vcol[path[-2]] == cv:
                    continue
                if a == cu or b == cv:
                    # this path's edge triple could never reach 3 colors
                    continue
                if any(a != a2 and b != b2 for a2, b2 in sigs):
                    found = True
                    break
                if (a, b) not in sigs:
                    sigs.append((a, b))
            if not found:
                return False
    return True
