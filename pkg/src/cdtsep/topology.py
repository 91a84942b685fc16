"""Closed-surface assembly from separator faces: the oriented girth
cycles plus the simple alternate cycles, with Euler characteristic,
orientability and genus."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import GraphError, underlying
from .separator import AlternateCensus, SeparatorDigraph, alternate_census

__all__ = ["FaceComplex", "EulerReport", "face_complex", "euler"]


@dataclass(frozen=True)
class FaceComplex:
    """Vertices, underlying edges and directed face-boundary walks; every
    edge lies in exactly two boundary slots."""

    vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EulerReport:
    vertices: int
    edges: int
    faces: int
    chi: int
    orientable: bool
    genus: int | None  # None when non-orientable; then 2 - chi is the
    # non-orientable (crosscap) genus


def face_complex(
    s: SeparatorDigraph, census: AlternateCensus | None = None
) -> FaceComplex:
    """Faces = the oriented girth cycles plus all simple single-step
    alternate cycles.  Raises GraphError if some underlying edge is not
    covered exactly twice."""
    if census is None:
        census = alternate_census(s, max_r=1)
    faces = [tuple(o) for o in s.succ_orbits()]
    faces += [o.walk for o in census.simple_cycles(1)]
    under = underlying(s.digraph)
    edges = tuple(under.edges())
    coverage = {e: 0 for e in edges}
    for face in faces:
        n = len(face)
        for i in range(n):
            u, v = face[i], face[(i + 1) % n]
            key = (min(u, v), max(u, v))
            if key not in coverage:
                raise GraphError(f"face walk uses non-edge {key}")
            coverage[key] += 1
    bad = [e for e, c in coverage.items() if c != 2]
    if bad:
        raise GraphError(f"edge {bad[0]} lies in {coverage[bad[0]]} face slots")
    return FaceComplex(s.order, edges, tuple(faces))


def euler(fc: FaceComplex) -> EulerReport:
    """Euler characteristic, orientability by 2-coloring face directions,
    and genus when orientable.

    Orientable means the faces can be flipped so that the two boundary
    slots of every edge traverse it in opposite directions; decided by
    parity propagation over the face-adjacency structure.
    """
    chi = fc.vertices - len(fc.edges) + len(fc.faces)
    # slots[edge] = list of (face id, direction)
    slots: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fid, face in enumerate(fc.faces):
        n = len(face)
        for i in range(n):
            u, v = face[i], face[(i + 1) % n]
            key = (min(u, v), max(u, v))
            slots.setdefault(key, []).append((fid, 1 if u < v else -1))
    sign: list[int | None] = [None] * len(fc.faces)
    orientable = True
    from collections import deque

    adj: dict[int, list[tuple[int, bool]]] = {}
    for pair in slots.values():
        (f1, d1), (f2, d2) = pair
        must_differ = d1 == d2  # same natural direction: one face flips
        adj.setdefault(f1, []).append((f2, must_differ))
        adj.setdefault(f2, []).append((f1, must_differ))
    for root in range(len(fc.faces)):
        if sign[root] is not None:
            continue
        sign[root] = 0
        queue = deque([root])
        while queue and orientable:
            f = queue.popleft()
            for h, differ in adj.get(f, []):
                want = sign[f] ^ int(differ)
                if sign[h] is None:
                    sign[h] = want
                    queue.append(h)
                elif sign[h] != want:
                    orientable = False
                    break
    genus = (2 - chi) // 2 if orientable else None
    if orientable and chi % 2 != 0:
        raise GraphError("orientable complex with odd Euler characteristic")
    return EulerReport(
        fc.vertices, len(fc.edges), len(fc.faces), chi, orientable, genus
    )
