"""Undirected simple graphs: parsing, structural queries, distance-2 edge
neighbourhoods and vertex classification.

Vertices are nonnegative integers.  An edge is always the ordered pair
``(min(u, v), max(u, v))``; every map in the package keys on that normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]

#: Sentinel girth value for forests; compares greater than any cycle length.
ACYCLIC = math.inf


class GraphParseError(ValueError):
    """Raised for malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def edge_key(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair to the canonical edge identity."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with sorted adjacency lists.

    Self-loops and parallel edges are rejected at construction; adjacency is
    symmetric by construction and the degree sum always equals twice the edge
    count.
    """

    __slots__ = ("_adj", "_edges", "_girth")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        edge_set: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphParseError(f"loop edge at vertex {u}")
            if u < 0 or v < 0:
                raise GraphParseError(f"negative vertex id in edge {u}-{v}")
            e = edge_key(u, v)
            if e in edge_set:
                continue
            edge_set.add(e)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(ns)) for v, ns in sorted(adj.items())
        }
        self._edges: tuple[Edge, ...] = tuple(sorted(edge_set))
        self._girth: float | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def neighbours(self, v: int) -> tuple[int, ...]:
        if v not in self._adj:
            raise KeyError(f"unknown vertex {v}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def num_vertices(self) -> int:
        return len(self._adj)

    def num_edges(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._adj == other._adj
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((tuple(self._adj), self._edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices()}, |E|={self.num_edges()})"

    # -- derived structure -------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, in sorted order."""
        seen: set[int] = set()
        comps = []
        for start in self._adj:
            if start in seen:
                continue
            stack, comp = [start], {start}
            seen.add(start)
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def girth(self) -> float:
        """Length of a shortest cycle, or ACYCLIC for forests.

        BFS from every vertex; a non-tree edge closing two BFS branches at
        depths d1, d2 witnesses a cycle of length d1 + d2 + 1.
        """
        if self._girth is not None:
            return self._girth
        best = ACYCLIC
        for root in self._adj:
            dist = {root: 0}
            parent = {root: -1}
            queue = [root]
            while queue:
                nxt = []
                for x in queue:
                    for y in self._adj[x]:
                        if y not in dist:
                            dist[y] = dist[x] + 1
                            parent[y] = x
                            nxt.append(y)
                        elif parent[x] != y and dist[y] >= dist[x]:
                            # cross or same-level edge: cycle through root
                            best = min(best, dist[x] + dist[y] + 1)
                queue = nxt
        self._girth = best
        return best

    def subgraph_without_edges(self, removed: Iterable[Edge]) -> "Graph":
        """New graph on the same vertex set minus the given edges."""
        gone = {edge_key(*e) for e in removed}
        return Graph(self._adj, [e for e in self._edges if e not in gone])

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self._adj, list(self._edges) + [edge_key(*e) for e in extra])

    # -- distance-2 edge neighbourhoods ------------------------------------

    def n2_edges(self, e: Edge, closed: bool = False) -> set[Edge]:
        """Edges at distance at most 2 from ``e``; ``closed`` includes ``e``.

        Distance 1 means sharing an endpoint; distance 2 means some edge is
        adjacent to both.
        """
        u, v = edge_key(*e)
        if v not in self._adj.get(u, ()):
            raise KeyError(f"edge {u}-{v} not in graph")
        out: set[Edge] = set()
        for a in (u, v):
            for b in self._adj[a]:
                f = edge_key(a, b)
                if f != (u, v):
                    out.add(f)
        ring = (set(self._adj[u]) | set(self._adj[v])) - {u, v}
        for w in ring:
            for x in self._adj[w]:
                if x not in (u, v):
                    f = edge_key(w, x)
                    if f != (u, v):
                        out.add(f)
        if closed:
            out.add((u, v))
        return out


@dataclass(frozen=True)
class VertexClass:
    """Degree profile of a vertex: its degree ``k``, its number ``l`` of
    degree-2 neighbours, and whether it is a bad 2-vertex (a 2-vertex with a
    2-vertex neighbour)."""

    vertex: int
    degree: int
    two_neighbours: int
    bad_two_vertex: bool

    def is_k_l(self, k: int, l: int) -> bool:
        return self.degree == k and self.two_neighbours == l

    def at_least(self, k: int) -> bool:
        return self.degree >= k

    def at_most(self, k: int) -> bool:
        return self.degree <= k


def classify_vertex(g: Graph, v: int) -> VertexClass:
    """Compute the degree / 2-neighbour profile of ``v`` in ``g``."""
    ns = g.neighbours(v)
    l = sum(1 for w in ns if g.degree(w) == 2)
    bad = g.degree(v) == 2 and any(g.degree(w) == 2 for w in ns)
    return VertexClass(v, len(ns), l, bad)


def is_4_sub(g: Graph, v: int, l: int) -> bool:
    """True when ``v`` is a 4-vertex with exactly ``l`` degree-2 neighbours."""
    return g.degree(v) == 4 and sum(1 for w in g.neighbours(v) if g.degree(w) == 2) == l


# -- edge-list I/O ----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: one ``u v`` pair per line, ``#`` comments,
    blank lines ignored.  A line holding a single integer declares an isolated
    vertex.  Duplicate edges (in either order) collapse to one."""
    vertices: list[int] = []
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            try:
                vertices.append(int(parts[0]))
            except ValueError:
                raise GraphParseError(f"not an integer: {parts[0]!r}", lineno) from None
            if vertices[-1] < 0:
                raise GraphParseError("negative vertex id", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise GraphParseError(f"loop edge at vertex {u}", lineno)
        if u < 0 or v < 0:
            raise GraphParseError("negative vertex id", lineno)
        vertices.extend((u, v))
        edges.append(edge_key(u, v))
    return Graph(vertices, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    covered = {v for e in g.edges for v in e}
    lines.extend(str(v) for v in g.vertices if v not in covered)
    return "\n".join(lines) + ("\n" if lines else "")


def to_dot(g: Graph, colours: dict[Edge, int] | None = None) -> str:
    """DOT export; when ``colours`` is given each edge is labelled with its
    colour index."""
    out = ["graph {"]
    covered = {v for e in g.edges for v in e}
    for v in g.vertices:
        if v not in covered:
            out.append(f"  {v};")
    for u, v in g.edges:
        label = ""
        if colours is not None and (u, v) in colours:
            label = f' [label="{colours[(u, v)]}"]'
        out.append(f"  {u} -- {v}{label};")
    out.append("}")
    return "\n".join(out) + "\n"
