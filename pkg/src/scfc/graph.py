"""Immutable simple-graph core.

Vertices are dense integers 0..n-1.  Edges are stored sorted with u < v, so
an edge's position in ``Graph.edges`` is a stable id used by colorings and by
the search kernels.  Everything derived from a Graph is immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    MalformedGraph6Error,
    NotAPathError,
    SelfLoopError,
    TooLargeError,
    VertexRangeError,
)

Edge = tuple[int, int]

INF = float("inf")


class Graph:
    """Simple undirected graph on vertices 0..n-1 with a sorted edge list."""

    __slots__ = ("n", "edges", "adj", "_edge_index", "_adj_mask", "_scratch")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 1:
            raise VertexRangeError(f"need at least one vertex, got n={n}")
        norm = []
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise DuplicateEdgeError(f"duplicate edge {norm[i]}")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        mask = [0] * n
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
            mask[u] |= 1 << v
            mask[v] |= 1 << u
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(norm)}
        self._adj_mask = tuple(mask)
        self._scratch: dict = {}  # write-once caches for derived structures

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj_mask[u] >> v & 1) if 0 <= v < self.n else False

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(u, v) if u < v else (v, u)]
        except KeyError:
            raise VertexRangeError(f"({u},{v}) is not an edge") from None

    def neighbor_mask(self, v: int) -> int:
        return self._adj_mask[v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph with vertex v renamed to perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and normalize (n, edge list) into a Graph."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# graph6 and edge-list interchange


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' header tolerated)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise MalformedGraph6Error(f"invalid character in {s!r}")
    if data[0] == 63:
        raise MalformedGraph6Error("graphs with more than 62 vertices not supported")
    n = data[0]
    body = data[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6Error(
            f"expected {need} data characters for n={n}, got {len(body)}"
        )
    bits = 0
    for b in body:
        bits = bits << 6 | b
    bits >>= len(body) * 6 - nbits  # drop padding
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(max(n, 1), edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no header)."""
    if g.n > 62:
        raise TooLargeError("graph6 writer supports up to 62 vertices")
    bits = 0
    nbits = g.n * (g.n - 1) // 2
    for j in range(1, g.n):
        for i in range(j):
            bits <<= 1
            if g.has_edge(i, j):
                bits |= 1
    pad = (-nbits) % 6
    bits <<= pad
    out = [chr(g.n + 63)]
    for k in range((nbits + pad) // 6 - 1, -1, -1):
        out.append(chr((bits >> 6 * k & 63) + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse the plain text format: first line 'n m', then m lines 'u v'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedGraph6Error("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedGraph6Error(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise MalformedGraph6Error(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)


def write_edgelist(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"]
    rows.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(rows) + "\n"


# ---------------------------------------------------------------------------
# traversal


def bfs_distances(g: Graph, u: int) -> list:
    """BFS distances from u; unreachable vertices get the INF sentinel."""
    if not 0 <= u < g.n:
        raise VertexRangeError(f"vertex {u} outside 0..{g.n - 1}")
    dist: list = [INF] * g.n
    dist[u] = 0
    q = deque([u])
    while q:
        x = q.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                q.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    return INF not in bfs_distances(g, 0)


def diameter(g: Graph) -> int:
    """Largest pairwise BFS distance; raises on disconnected input."""
    best = 0
    for u in range(g.n):
        d = bfs_distances(g, u)
        if INF in d:
            raise DisconnectedError("diameter undefined for disconnected graphs")
        best = max(best, max(d))
    return int(best)


@dataclasses.dataclass(frozen=True)
class ShortestPathDag:
    """The layered DAG of all shortest source->target paths.

    ``layer`` maps each vertex lying on some shortest path to its distance
    from the source; ``out_edges`` maps such a vertex to the (neighbor,
    edge id) steps that advance distance by one toward the target.
    """

    source: int
    target: int
    dist: int
    layer: dict
    out_edges: dict

    def count_paths(self) -> int:
        counts = {self.source: 1}
        for v in sorted(self.layer, key=self.layer.get):
            for w, _ in self.out_edges[v]:
                counts[w] = counts.get(w, 0) + counts[v]
        return counts[self.target]

    def iter_paths(self) -> Iterator[tuple[int, ...]]:
        """Yield every maximal path as a vertex tuple (deterministic order)."""
        stack = [(self.source, (self.source,))]
        while stack:
            v, path = stack.pop()
            if v == self.target:
                yield path
                continue
            for w, _ in reversed(self.out_edges[v]):
                stack.append((w, path + (w,)))


def shortest_path_dag(g: Graph, u: int, v: int) -> ShortestPathDag:
    if u == v:
        raise VertexRangeError("source and target must differ")
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    if du[v] == INF:
        raise DisconnectedError(f"no path between {u} and {v}")
    d = int(du[v])
    keep = {x for x in range(g.n) if du[x] != INF and dv[x] != INF and du[x] + dv[x] == d}
    layer = {x: int(du[x]) for x in keep}
    out_edges = {x: [] for x in keep}
    for x in keep:
        for y in g.adj[x]:
            if y in keep and layer[y] == layer[x] + 1:
                out_edges[x].append((y, g.edge_id(x, y)))
    return ShortestPathDag(
        source=u,
        target=v,
        dist=d,
        layer=layer,
        out_edges={x: tuple(sorted(es)) for x, es in out_edges.items()},
    )


# ---------------------------------------------------------------------------
# structural predicates


def bridges(g: Graph) -> frozenset:
    """Edges whose removal disconnects the graph (low-link computation)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
                elif parent != -1 and disc[w] < disc[v] - 1:
                    # parallel edges are impossible in a simple graph; the
                    # parent test is safe because multi-edges are rejected
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add((p, v) if p < v else (v, p))
    return frozenset(out)


def forced_edges(g: Graph) -> frozenset:
    """Edges lying in no cycle of length 3 or 4."""
    out = []
    for u, v in g.edges:
        if g.neighbor_mask(u) & g.neighbor_mask(v):
            continue  # triangle
        in_square = False
        for x in g.adj[u]:
            if x == v:
                continue
            # need x-y with y a neighbor of v other than u, y != x
            if g.neighbor_mask(x) & (g.neighbor_mask(v) & ~(1 << u) & ~(1 << x)):
                in_square = True
                break
        if not in_square:
            out.append((u, v))
    return frozenset(out)


def is_forced_2path(g: Graph, x: int, y: int, z: int) -> bool:
    """True iff xyz is the unique 2-path between x and z and xz is a non-edge."""
    if not (g.has_edge(x, y) and g.has_edge(y, z)) or x == z:
        raise NotAPathError(f"{x}-{y}-{z} is not a 2-path")
    if g.has_edge(x, z):
        return False
    return g.neighbor_mask(x) & g.neighbor_mask(z) == 1 << y


def forced_2paths(g: Graph) -> list:
    """All forced 2-paths as (x, y, z) with x < z."""
    out = []
    for y in range(g.n):
        nbrs = g.adj[y]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                x, z = nbrs[i], nbrs[j]
                if not g.has_edge(x, z) and g.neighbor_mask(x) & g.neighbor_mask(z) == 1 << y:
                    out.append((x, y, z) if x < z else (z, y, x))
    out.sort()
    return out


class ForcedCycle(NamedTuple):
    vertices: tuple
    even: bool


def forced_cycles_even(g: Graph, max_len: int | None = None) -> list:
    """Cycles whose every pair of successive edges is a forced 2-path.

    The search is bounded by ``max_len`` (default 2n) and each cycle is
    reported once, flagged even/odd by its length.
    """
    cap = 2 * g.n if max_len is None else max_len
    found = {}

    def forced(a: int, b: int, c: int) -> bool:
        return (
            not g.has_edge(a, c)
            and g.neighbor_mask(a) & g.neighbor_mask(c) == 1 << b
        )

    for v0 in range(g.n):
        # path stack rooted at v0; all other cycle vertices must exceed v0
        stack = [(v0, w, (v0, w)) for w in g.adj[v0] if w > v0]
        while stack:
            prev, cur, path = stack.pop()
            for nxt in g.adj[cur]:
                if nxt == v0 and len(path) >= 3:
                    if path[1] < prev and forced(prev, cur, v0) and forced(cur, v0, path[1]):
                        key = frozenset(
                            (path[i], path[(i + 1) % len(path)])
                            for i in range(len(path))
                        )
                        found.setdefault(key, path)
                    continue
                if nxt <= v0 or nxt in path or len(path) >= cap:
                    continue
                if forced(prev, cur, nxt):
                    stack.append((cur, nxt, path + (nxt,)))
    cycles = sorted(found.values())
    return [ForcedCycle(vertices=c, even=len(c) % 2 == 0) for c in cycles]


class ParallelBundle(NamedTuple):
    u: int
    v: int
    lengths: tuple
    paths: tuple


def parallel_path_bundles(g: Graph) -> list:
    """Internally disjoint u-v paths whose internal vertices all have degree 2.

    Paths are the maximal degree-2 chains between distinct junction vertices
    (degree != 2); a bare cycle has no junctions and yields no bundles, and
    direct u-v edges are not counted as chains.
    """
    junctions = [v for v in range(g.n) if g.degree(v) != 2]
    seen = set()
    chains: dict = {}
    for u in junctions:
        for w in g.adj[u]:
            if g.degree(w) != 2:
                continue  # length-1 or a chain discovered from its own walk
            path = [u, w]
            prev, cur = u, w
            while g.degree(cur) == 2:
                nxt = next(x for x in g.adj[cur] if x != prev)
                path.append(nxt)
                prev, cur = cur, nxt
            end = path[-1]
            if end == u:
                continue  # closed loop back to the same junction
            key = frozenset(
                (path[i], path[i + 1]) if path[i] < path[i + 1] else (path[i + 1], path[i])
                for i in range(len(path) - 1)
            )
            if key in seen:
                continue
            seen.add(key)
            a, b = (u, end) if u < end else (end, u)
            chains.setdefault((a, b), []).append(
                tuple(path) if u == a else tuple(reversed(path))
            )
    out = []
    for (a, b), paths in sorted(chains.items()):
        paths.sort(key=lambda p: (len(p), p))
        out.append(
            ParallelBundle(
                u=a,
                v=b,
                lengths=tuple(len(p) - 1 for p in paths),
                paths=tuple(paths),
            )
        )
    return out


def components_without(g: Graph, w: int) -> int:
    """Number of connected components of g - w."""
    seen = [False] * g.n
    seen[w] = True
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        q = deque([s])
        seen[s] = True
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    q.append(y)
    return count


def cut_vertex_components(g: Graph, w: int) -> int:
    if not 0 <= w < g.n:
        raise VertexRangeError(f"vertex {w} outside 0..{g.n - 1}")
    if g.n == 1:
        return 0
    return components_without(g, w)
