"""Combinatorial planar embeddings: rotation systems and face walks.

Planarity testing is delegated to networkx's left-right test; the rotation
system it returns is re-traced here into explicit face walks so that face
lengths (bridges counted twice) and per-component Euler checks are owned by
this package.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Edge, Graph, edge_key


@dataclass(frozen=True)
class Face:
    """A face walk: ``walk[i] -> walk[i+1]`` (cyclically) are its directed
    edges.  The length r(f) is the number of edge visits, so a bridge crossed
    out and back contributes 2."""

    id: int
    walk: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.walk)

    def vertex_visits(self) -> tuple[int, ...]:
        return self.walk


@dataclass(frozen=True)
class NonPlanar:
    """Negative planarity verdict with a Kuratowski-subgraph witness."""

    witness: tuple[Edge, ...]


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    rotation: dict[int, tuple[int, ...]]
    faces: tuple[Face, ...]

    def face_lengths(self) -> list[int]:
        return [f.length for f in self.faces]

    def faces_of_component(self, comp: tuple[int, ...]) -> list[Face]:
        members = set(comp)
        return [f for f in self.faces if f.walk and f.walk[0] in members]


def _trace_faces(rotation: dict[int, tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Partition directed edges into face walks.

    Successor rule: after arriving at v along u->v, leave along the neighbour
    that follows u in the rotation at v.
    """
    index = {
        v: {w: i for i, w in enumerate(ns)} for v, ns in rotation.items()
    }
    unused: set[tuple[int, int]] = {
        (u, v) for u, ns in rotation.items() for v in ns
    }
    walks = []
    while unused:
        start = min(unused)
        walk = []
        cur = start
        while True:
            unused.discard(cur)
            u, v = cur
            walk.append(u)
            ns = rotation[v]
            nxt = ns[(index[v][u] + 1) % len(ns)]
            cur = (v, nxt)
            if cur == start:
                break
        walks.append(tuple(walk))
    return walks


def planar_embed(g: Graph) -> Embedding | NonPlanar:
    """Planarity test returning a rotation system plus its face walks, or a
    ``NonPlanar`` witness.

    The traced faces satisfy Euler's formula per connected component; that is
    asserted here, not left to callers.
    """
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from(g.edges)
    ok, cert = nx.check_planarity(ng, counterexample=True)
    if not ok:
        witness = tuple(sorted(edge_key(u, v) for u, v in cert.edges()))
        return NonPlanar(witness)
    rotation = {v: tuple(cert.neighbors_cw_order(v)) for v in g.vertices}
    faces = tuple(
        Face(i, walk) for i, walk in enumerate(_trace_faces(rotation))
    )
    emb = Embedding(g, rotation, faces)
    _check_euler(emb)
    return emb


def _check_euler(emb: Embedding) -> None:
    g = emb.graph
    for comp in g.components():
        members = set(comp)
        nv = len(comp)
        ne = sum(1 for u, v in g.edges if u in members)
        nf = len(emb.faces_of_component(comp))
        if ne == 0:
            continue  # single vertex: one implicit face
        if nv - ne + nf != 2:
            raise EmbeddingError(
                f"face tracing broke Euler's formula on component {comp[:5]}...: "
                f"V={nv} E={ne} F={nf}"
            )


def faces(emb: Embedding) -> list[tuple[int, int]]:
    """(face id, face length) pairs; lengths sum to twice the edge count."""
    return [(f.id, f.length) for f in emb.faces]
