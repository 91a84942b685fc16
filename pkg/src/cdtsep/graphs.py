"""Core undirected/directed graph types and elementary metrics.

Vertices are dense integers 0..order-1.  All structures are immutable
after construction and every function here is pure, so shared instances
are safe to use concurrently.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass

__all__ = [
    "GraphError",
    "Graph",
    "Digraph",
    "DistanceTable",
    "build_graph",
    "build_digraph",
    "digraph_of",
    "underlying",
    "distances",
    "girth",
    "enumerate_arcs",
    "is_arc",
    "is_bipartite",
    "is_hamiltonian",
    "is_planar",
]


class GraphError(ValueError):
    """Structurally invalid graph input (bad endpoint, loop, duplicate)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted per-vertex neighbor lists."""

    order: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.order) for v in self.adj[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_cubic(self) -> bool:
        return all(len(a) == 3 for a in self.adj)

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = _bfs_reach(self.adj, 0)
        return len(seen) == self.order


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph; arcs have no duplicates and no loops."""

    order: int
    out_adj: tuple[tuple[int, ...], ...]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.out_adj[u]]

    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.arcs():
            inc[v].append(u)
        return tuple(tuple(sorted(a)) for a in inc)

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances of a connected graph."""

    dist: tuple[tuple[int, ...], ...]
    diameter: int


def build_graph(order: int, edges) -> Graph:
    """Build a validated Graph from an edge list.

    Raises GraphError on out-of-range endpoints, self-loops or
    duplicate edges.
    """
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"endpoint out of range: ({u}, {v}) with order {order}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, tuple(tuple(sorted(a)) for a in adj))


def build_digraph(order: int, arcs) -> Digraph:
    """Build a validated Digraph from an arc list."""
    out: list[set[int]] = [set() for _ in range(order)]
    for u, v in arcs:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"endpoint out of range: ({u}, {v}) with order {order}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in out[u]:
            raise GraphError(f"duplicate arc ({u}, {v})")
        out[u].add(v)
    return Digraph(order, tuple(tuple(sorted(a)) for a in out))


def digraph_of(g: Graph) -> Digraph:
    """View an undirected graph as a digraph of oppositely oriented arc pairs."""
    return Digraph(g.order, g.adj)


def underlying(d: Digraph) -> Graph:
    """Forget orientation; oppositely oriented arc pairs merge into one edge."""
    edges = {(min(u, v), max(u, v)) for u, v in d.arcs()}
    adj: list[set[int]] = [set() for _ in range(d.order)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(d.order, tuple(tuple(sorted(a)) for a in adj))


def _bfs_reach(adj, root: int) -> set[int]:
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _bfs_dist(adj, root: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distances(g: Graph) -> DistanceTable:
    """BFS-exact all-pairs distances; raises GraphError when disconnected."""
    rows = []
    for root in range(g.order):
        row = _bfs_dist(g.adj, root, g.order)
        if -1 in row:
            raise GraphError(
                f"graph is disconnected: no path from {root} to {row.index(-1)}"
            )
        rows.append(tuple(row))
    diameter = max(max(r) for r in rows) if g.order else 0
    return DistanceTable(tuple(rows), diameter)


def girth(g: Graph) -> int:
    """Length of a shortest cycle, by BFS from every vertex.

    Raises GraphError on acyclic input.
    """
    best = g.order + 1
    for root in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u] and parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    if best > g.order:
        raise GraphError("graph is acyclic; girth undefined")
    return best


def enumerate_arcs(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All directed non-backtracking walks of a given length.

    Each walk is a tuple of length+1 vertices; output is in lexicographic
    order of the vertex sequences.  For a cubic graph there are exactly
    3 * order * 2**(length-1) of them.
    """
    if length < 1:
        raise GraphError("arc length must be >= 1")
    out: list[tuple[int, ...]] = []
    stack: list[tuple[int, ...]] = [
        (u, v) for u in range(g.order) for v in g.adj[u]
    ]
    stack.reverse()
    while stack:
        walk = stack.pop()
        if len(walk) == length + 1:
            out.append(walk)
            continue
        prev, cur = walk[-2], walk[-1]
        for nxt in reversed(g.adj[cur]):
            if nxt != prev:
                stack.append(walk + (nxt,))
    return out


def is_arc(g: Graph, seq) -> bool:
    """Whether a vertex sequence is a non-backtracking walk in g."""
    if len(seq) < 2:
        return False
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            return False
    return all(seq[i + 2] != seq[i] for i in range(len(seq) - 2))


def is_bipartite(g: Graph) -> bool:
    """2-coloring existence by BFS parity."""
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_hamiltonian(g: Graph, budget: float = 60.0) -> bool | None:
    """Backtracking Hamilton-cycle search with degree pruning.

    Returns True/False, or None when the time budget runs out.
    """
    n = g.order
    if n < 3:
        return False
    deadline = time.monotonic() + budget
    adj = [set(a) for a in g.adj]
    start = 0
    path = [start]
    on_path = [False] * n
    on_path[start] = True
    # avail[v]: neighbors of v not yet interior to the path
    avail = [len(a) for a in adj]

    def feasible() -> bool:
        # every off-path vertex still needs 2 usable incident edges;
        # edges to the path endpoint and back to the start stay usable
        end = path[-1]
        for v in range(n):
            if on_path[v]:
                continue
            usable = avail[v]
            if end in adj[v]:
                usable += 1
            if start in adj[v]:
                usable += 1
            if usable < 2:
                return False
        return True

    def search() -> bool | None:
        if time.monotonic() > deadline:
            return None
        u = path[-1]
        if len(path) == n:
            return start in adj[u]
        for v in sorted(adj[u]):
            if on_path[v]:
                continue
            path.append(v)
            on_path[v] = True
            for w in adj[v]:
                avail[w] -= 1
            ok: bool | None = False
            if feasible():
                ok = search()
            for w in adj[v]:
                avail[w] += 1
            on_path[v] = False
            path.pop()
            if ok or ok is None:
                return ok
        return False

    return search()


def is_planar(g: Graph) -> bool:
    """Planarity test (delegates to networkx's linear-time check)."""
    if g.order >= 3 and g.num_edges() > 3 * g.order - 6:
        return False
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(h)
    return bool(ok)
