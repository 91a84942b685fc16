"""Separator digraph: vertices are the (k-1)-arcs of the host graph,
arcs follow the oriented girth cycles one step, and each vertex is paired
with its reversal by a transposition edge."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Digraph, Graph, GraphError, build_digraph, enumerate_arcs, underlying
from .cycles import CycleSet
from .orient import OrientationAssignment, oriented_cycles, verify_ooa

__all__ = [
    "SeparatorDigraph",
    "AlternateOrbit",
    "AlternateCensus",
    "SeparatorSummary",
    "build_separator",
    "alternate_census",
    "separator_summary",
]


@dataclass
class SeparatorDigraph:
    """Immutable after construction.

    arcs[i] is the vertex-id-sequence of separator vertex i (sorted
    lexicographically); succ follows the unique oriented girth cycle one
    step; trans maps a vertex to its reversal; digraph combines succ arcs
    with both directions of every transposition pair.
    """

    graph: Graph
    k: int
    girth: int
    arcs: tuple[tuple[int, ...], ...]
    succ: tuple[int, ...]
    trans: tuple[int, ...]
    digraph: Digraph
    oriented_cycle_count: int

    @property
    def order(self) -> int:
        return len(self.arcs)

    def arc_label(self, v: int, table=None) -> str:
        seq = self.arcs[v]
        if table is None:
            return "".join(str(x) for x in seq)
        return " ".join(table.to_label[x] for x in seq)

    def succ_orbits(self) -> list[tuple[int, ...]]:
        """The oriented girth cycles of the separator, as vertex orbits of
        succ, each starting at its least vertex."""
        seen = [False] * self.order
        orbits = []
        for v in range(self.order):
            if seen[v]:
                continue
            orbit = []
            u = v
            while not seen[u]:
                seen[u] = True
                orbit.append(u)
                u = self.succ[u]
            orbits.append(tuple(orbit))
        return orbits


@dataclass(frozen=True)
class AlternateOrbit:
    """One closed walk alternating r cycle-arcs with a transposition edge.

    walk lists the (r+1)*size vertices visited; simple means no vertex
    repeats, i.e. the walk is a genuine cycle."""

    r: int
    size: int
    walk: tuple[int, ...]
    simple: bool

    @property
    def length(self) -> int:
        return len(self.walk)


@dataclass(frozen=True)
class AlternateCensus:
    """Orbit decompositions of transposition-after-r-steps, r = 1..max_r."""

    orbits: dict[int, tuple[AlternateOrbit, ...]]

    def simple_cycles(self, r: int) -> list[AlternateOrbit]:
        return [o for o in self.orbits[r] if o.simple]

    def simple_count(self, r: int) -> int:
        return len(self.simple_cycles(r))

    def simple_lengths(self, r: int) -> set[int]:
        return {o.length for o in self.simple_cycles(r)}


@dataclass(frozen=True)
class SeparatorSummary:
    vertices: int
    cycle_arcs: int
    transposition_edges: int
    underlying_edges: int
    oriented_cycles: int
    alternate_simple: dict[int, int]
    alternate_lengths: dict[int, set[int]]


def build_separator(
    g: Graph, cs: CycleSet, k: int, a: OrientationAssignment
) -> SeparatorDigraph:
    """Assemble the separator from a verified orientation assignment."""
    if not verify_ooa(g, cs, k, a):
        raise GraphError("assignment fails the one-oriented-cycle-per-arc check")
    arcs = tuple(tuple(x) for x in enumerate_arcs(g, k - 1))
    index = {arc: i for i, arc in enumerate(arcs)}
    succ: list[int | None] = [None] * len(arcs)
    glen = cs.girth
    for cyc in oriented_cycles(cs, a):
        for i in range(glen):
            window = tuple(cyc[(i + j) % glen] for j in range(k + 1))
            cur = index[window[:k]]
            nxt = index[window[1:]]
            if succ[cur] is not None:
                raise GraphError(f"arc {window[:k]} traversed more than once")
            succ[cur] = nxt
    if any(s is None for s in succ):
        raise GraphError("some arc is not traversed by any oriented cycle")
    trans = tuple(index[arc[::-1]] for arc in arcs)
    if any(trans[v] == v for v in range(len(arcs))):
        raise GraphError("transposition involution has a fixed point")
    darcs = [(v, succ[v]) for v in range(len(arcs))]
    darcs += [(v, trans[v]) for v in range(len(arcs))]
    digraph = build_digraph(len(arcs), darcs)
    sep = SeparatorDigraph(
        g, k, glen, arcs, tuple(succ), trans, digraph, len(cs)
    )
    _check_invariants(sep)
    return sep


def _check_invariants(s: SeparatorDigraph) -> None:
    orbits = s.succ_orbits()
    if len(orbits) != s.oriented_cycle_count:
        raise GraphError("wrong number of oriented cycles in the separator")
    if any(len(o) != s.girth for o in orbits):
        raise GraphError("oriented cycle of wrong length in the separator")
    in_deg = [0] * s.order
    for _u, v in s.digraph.arcs():
        in_deg[v] += 1
    if any(len(s.digraph.out_adj[v]) != 2 or in_deg[v] != 2 for v in range(s.order)):
        raise GraphError("separator is not 2-in 2-out regular")
    under = underlying(s.digraph)
    if not (under.is_cubic() and under.is_connected()):
        raise GraphError("separator underlying graph is not cubic connected")


def alternate_census(s: SeparatorDigraph, max_r: int = 4) -> AlternateCensus:
    """Orbit decomposition of transposition-after-r-cycle-steps for
    r = 1..max_r, with simple/non-simple classification of each walk."""
    out: dict[int, tuple[AlternateOrbit, ...]] = {}
    for r in range(1, max_r + 1):
        step = list(range(s.order))
        for _ in range(r):
            step = [s.succ[v] for v in step]
        f = [s.trans[v] for v in step]
        seen = [False] * s.order
        orbits = []
        for v0 in range(s.order):
            if seen[v0]:
                continue
            cycle_starts = []
            v = v0
            while not seen[v]:
                seen[v] = True
                cycle_starts.append(v)
                v = f[v]
            walk = []
            for u in cycle_starts:
                w = u
                walk.append(w)
                for _ in range(r):
                    w = s.succ[w]
                    walk.append(w)
            simple = len(set(walk)) == len(walk)
            orbits.append(AlternateOrbit(r, len(cycle_starts), tuple(walk), simple))
        total = sum(o.size for o in orbits)
        if total != s.order:
            raise GraphError("alternate orbits do not partition the vertex set")
        out[r] = tuple(orbits)
    return AlternateCensus(out)


def separator_summary(
    s: SeparatorDigraph, census: AlternateCensus | None = None
) -> SeparatorSummary:
    if census is None:
        census = alternate_census(s)
    under = underlying(s.digraph)
    rs = sorted(census.orbits)
    return SeparatorSummary(
        vertices=s.order,
        cycle_arcs=s.order,
        transposition_edges=s.order // 2,
        underlying_edges=under.num_edges(),
        oriented_cycles=s.oriented_cycle_count,
        alternate_simple={r: census.simple_count(r) for r in rs},
        alternate_lengths={r: census.simple_lengths(r) for r in rs},
    )
