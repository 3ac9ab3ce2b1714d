"""Strong colouring via matchings: decompose into proper colour classes,
colour each class's distance-2 conflict graph, and stack the results.

The per-class conflict graph of a matching in a planar host is itself
planar, so four node colours always suffice; an exact search tries to
realise that, and a constructive five-colouring stands in when the search
runs out of budget.  Stacking the classes multiplies the two counts, which
keeps 4*Delta within reach whenever a Delta-class edge colouring exists.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .colouring import Palette, PartialColouring, verify_strong
from .embedding import NonPlanar, planar_embed
from .girth6 import InternalInconsistency, PreconditionError
from .graph import ACYCLIC, Edge, Graph, edge_key


@dataclass(frozen=True)
class EdgeColouring:
    """Proper edge colouring: classes are matchings, indexed 1..class_count."""

    graph: Graph
    assignment: dict[Edge, int]
    class_count: int

    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {i: [] for i in range(1, self.class_count + 1)}
        for e, i in sorted(self.assignment.items()):
            out[i].append(e)
        return out

    def check(self) -> None:
        if set(self.assignment) != set(self.graph.edges):
            raise ValueError("edge colouring is not total")
        for i, cls in self.classes().items():
            seen: set[int] = set()
            for u, v in cls:
                if u in seen or v in seen:
                    raise ValueError(f"class {i} is not a matching")
                seen.update((u, v))


# -- proper edge colouring with Delta+1 colours --------------------------------


class _EdgeColourState:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.colour: dict[Edge, int] = {}
        self.used: dict[int, set[int]] = {v: set() for v in g.vertices}

    def set(self, e: Edge, c: int | None) -> None:
        e = edge_key(*e)
        old = self.colour.pop(e, None)
        if old is not None:
            self.used[e[0]].discard(old)
            self.used[e[1]].discard(old)
        if c is not None:
            self.colour[e] = c
            self.used[e[0]].add(c)
            self.used[e[1]].add(c)

    def free(self, v: int) -> list[int]:
        return [c for c in range(1, self.k + 1) if c not in self.used[v]]

    def invert_path(self, start: int, c: int, d: int) -> None:
        """Swap colours c and d along the maximal c/d alternating path that
        starts at ``start`` with a d-coloured edge."""
        path: list[Edge] = []
        x, want = start, d
        while True:
            e = next(
                (
                    edge_key(x, y)
                    for y in self.g.neighbours(x)
                    if self.colour.get(edge_key(x, y)) == want
                ),
                None,
            )
            if e is None or e in path:
                break
            path.append(e)
            x = e[0] if e[1] == x else e[1]
            want = c if want == d else d
        new = [c if self.colour[e] == d else d for e in path]
        for e in path:
            self.set(e, None)
        for e, nc in zip(path, new):
            self.set(e, nc)


def vizing_edge_colour(g: Graph) -> EdgeColouring:
    """Proper edge colouring with at most Delta+1 classes by fan rotation
    and alternating-path recolouring."""
    delta = g.max_degree()
    if g.num_edges() == 0:
        return EdgeColouring(g, {}, 0)
    st = _EdgeColourState(g, delta + 1)
    for u, v in g.edges:
        common = set(st.free(u)) & set(st.free(v))
        if common:
            st.set((u, v), min(common))
            continue
        _fan_colour(st, u, v)
    ec = EdgeColouring(g, dict(st.colour), max(st.colour.values()))
    ec.check()
    return ec


def _fan_colour(st: _EdgeColourState, u: int, v: int) -> None:
    g = st.g
    fan = [v]
    in_fan = {v}
    while True:
        last_free = set(st.free(fan[-1]))
        nxt = next(
            (
                w
                for w in g.neighbours(u)
                if w not in in_fan
                and st.colour.get(edge_key(u, w)) in last_free
            ),
            None,
        )
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)
    c = min(st.free(u))
    d = min(st.free(fan[-1]))
    if c != d:
        st.invert_path(u, c, d)
    # after the inversion d is free at u; colour the shortest fan prefix
    # whose tip sees d free, shifting the prefix colours toward u
    for j, w in enumerate(fan):
        if j > 0:
            prev = fan[j - 1]
            if st.colour.get(edge_key(u, w)) not in st.free(prev):
                break  # prefix stopped being a fan after the inversion
        if d in st.free(w):
            shifted = [st.colour[edge_key(u, fan[i + 1])] for i in range(j)]
            for i in range(j):
                st.set(edge_key(u, fan[i]), None)
            st.set(edge_key(u, w), None)
            for i in range(j):
                st.set(edge_key(u, fan[i]), shifted[i])
            st.set(edge_key(u, w), d)
            return
    raise InternalInconsistency("fan recolouring found no rotation point")


# -- exact Delta-class search ---------------------------------------------------


def class1_edge_colour(g: Graph, budget: float | None = None) -> EdgeColouring | None:
    """Proper edge colouring with exactly Delta classes, or None when the
    search space is exhausted or the time budget runs out."""
    delta = g.max_degree()
    if g.num_edges() == 0:
        return EdgeColouring(g, {}, 0)
    deadline = time.monotonic() + budget if budget is not None else None
    edges = list(g.edges)
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, (x, y) in enumerate(edges):
        incident[x].append(i)
        incident[y].append(i)
    adjacency = [
        sorted(
            {j for v in e for j in incident[v] if j != i}
        )
        for i, e in enumerate(edges)
    ]
    colour = [0] * len(edges)
    state = {"nodes": 0, "max_used": 0}

    def free(i: int) -> list[int]:
        cap = min(delta, state["max_used"] + 1)
        used = {colour[j] for j in adjacency[i] if colour[j]}
        return [c for c in range(1, cap + 1) if c not in used]

    def pick() -> int | None:
        best, count = None, None
        for i, c in enumerate(colour):
            if c:
                continue
            n = len(free(i))
            if count is None or n < count:
                best, count = i, n
                if n == 0:
                    break
        return best

    def search() -> bool:
        state["nodes"] += 1
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
        i = pick()
        if i is None:
            return True
        prev = state["max_used"]
        for c in free(i):
            colour[i] = c
            state["max_used"] = max(prev, c)
            if search():
                return True
            colour[i] = 0
            state["max_used"] = prev
        return False

    try:
        if not search():
            return None
    except TimeoutError:
        return None
    ec = EdgeColouring(g, dict(zip(edges, colour)), delta)
    ec.check()
    return ec


def corollary1_applies(delta: int, girth: float) -> bool:
    """Regimes in which a Delta-class proper edge colouring is guaranteed to
    exist for planar graphs."""
    if girth is None:
        girth = ACYCLIC
    return delta >= 7 or (delta >= 5 and girth >= 4) or girth >= 5


# -- conflict graphs and their node colourings ----------------------------------


@dataclass(frozen=True)
class ConflictGraph:
    """Distance-2 conflicts inside one matching: node i stands for edge
    ``nodes[i]``; linked nodes must receive different colours."""

    nodes: tuple[Edge, ...]
    graph: Graph


def conflict_graph(g: Graph, matching: list[Edge]) -> ConflictGraph:
    edges = sorted(edge_key(*e) for e in matching)
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} not in graph")
        if u in seen or v in seen:
            raise ValueError("edge set is not a matching")
        seen.update((u, v))
    index = {e: i for i, e in enumerate(edges)}
    links = []
    for e in edges:
        for f in g.n2_edges(e):
            if f in index and index[f] > index[e]:
                links.append((index[e], index[f]))
    return ConflictGraph(tuple(edges), Graph(range(len(edges)), links))


def colour_planar_nodes(cg: ConflictGraph, budget: float | None = None) -> dict[int, int]:
    """Proper node colouring of a planar conflict graph with at most 5
    colours; an exact search reaches 4 unless the budget interferes."""
    if isinstance(planar_embed(cg.graph), NonPlanar):
        raise InternalInconsistency(
            "conflict graph of a matching in a planar host must be planar"
        )
    if cg.graph.num_vertices() == 0:
        return {}
    result = _node_colour_exact(cg.graph, 4, budget)
    if result is None:
        result = _five_colour_planar(cg.graph)
    _check_proper(cg.graph, result)
    return result


def _check_proper(g: Graph, col: dict[int, int]) -> None:
    for u, v in g.edges:
        if col[u] == col[v]:
            raise ValueError(f"nodes {u},{v} share colour {col[u]}")


def _node_colour_exact(g: Graph, k: int, budget: float | None) -> dict[int, int] | None:
    deadline = time.monotonic() + budget if budget is not None else None
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    colour = [0] * len(verts)
    state = {"nodes": 0, "max_used": 0}

    def free(i: int) -> list[int]:
        cap = min(k, state["max_used"] + 1)
        used = {colour[pos[w]] for w in g.neighbours(verts[i]) if colour[pos[w]]}
        return [c for c in range(1, cap + 1) if c not in used]

    def pick() -> int | None:
        best, count = None, None
        for i, c in enumerate(colour):
            if c:
                continue
            n = len(free(i))
            if count is None or n < count:
                best, count = i, n
                if n == 0:
                    break
        return best

    def search() -> bool:
        state["nodes"] += 1
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError
        i = pick()
        if i is None:
            return True
        prev = state["max_used"]
        for c in free(i):
            colour[i] = c
            state["max_used"] = max(prev, c)
            if search():
                return True
            colour[i] = 0
            state["max_used"] = prev
        return False

    try:
        if not search():
            return None
    except TimeoutError:
        return None
    return {verts[i]: c for i, c in enumerate(colour)}


def _five_colour_planar(g: Graph) -> dict[int, int]:
    """Constructive five-colouring: peel minimum-degree vertices, colour
    back greedily, and repair stuck degree-5 vertices by swapping a
    two-colour component that separates two of their neighbours."""
    work = {v: set(g.neighbours(v)) for v in g.vertices}
    stack: list[tuple[int, tuple[int, ...]]] = []
    while work:
        v = min(work, key=lambda x: (len(work[x]), x))
        if len(work[v]) > 5:
            raise InternalInconsistency("peeling found only degree > 5: not planar")
        stack.append((v, tuple(sorted(work[v]))))
        for w in work[v]:
            work[w].discard(v)
        del work[v]

    colour: dict[int, int] = {}
    for v, nbrs in reversed(stack):
        used = {colour[w] for w in nbrs}
        avail = [c for c in range(1, 6) if c not in used]
        if avail:
            colour[v] = avail[0]
            continue
        if not _kempe_repair(g, colour, v, nbrs):
            raise InternalInconsistency("no two-colour swap freed a colour: not planar")
    return colour


def _kempe_repair(
    g: Graph, colour: dict[int, int], v: int, nbrs: tuple[int, ...]
) -> bool:
    by_colour = {colour[w]: w for w in nbrs}
    for a, b in itertools.combinations(sorted(by_colour), 2):
        start = by_colour[a]
        comp = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for y in g.neighbours(x):
                if y not in comp and colour.get(y) in (a, b):
                    comp.add(y)
                    queue.append(y)
        if by_colour[b] in comp:
            continue
        for x in comp:
            colour[x] = b if colour[x] == a else a
        colour[v] = a
        return True
    return False


# -- composition and the full pipeline ------------------------------------------


def compose(
    ec: EdgeColouring, per_class: list[dict[Edge, int]]
) -> PartialColouring:
    """Stack per-class node colourings into one strong colouring: an edge in
    class i with node colour c receives (i-1)*maxC + c, where maxC is the
    largest node colour any class uses."""
    ec.check()
    classes = ec.classes()
    if len(per_class) != ec.class_count:
        raise ValueError("one node colouring per class required")
    max_c = 1
    for i, cls in classes.items():
        node_col = per_class[i - 1]
        if set(node_col) != set(cls):
            raise ValueError(f"class {i} colouring keys do not match its edges")
        for e in cls:
            for f in ec.graph.n2_edges(e):
                if f in node_col and f != e and node_col[f] == node_col[e]:
                    raise ValueError(
                        f"class {i} node colouring is improper: {e} vs {f}"
                    )
        if cls:
            max_c = max(max_c, max(node_col.values()))
    palette = Palette(max(ec.class_count, 1) * max_c)
    out = PartialColouring(ec.graph, palette, checked=False)
    for i in range(1, ec.class_count + 1):
        for e, c in per_class[i - 1].items():
            out.put(e, (i - 1) * max_c + c)
    return out


@dataclass
class PipelineReport:
    regime: str
    class_count: int
    max_c: int
    colours_used: int
    bound_claimed: int
    palette_size: int
    corollary1: bool

    def as_dict(self) -> dict:
        return {
            "regime": self.regime,
            "classCount": self.class_count,
            "maxC": self.max_c,
            "colours_used": self.colours_used,
            "bound_claimed": self.bound_claimed,
            "palette": self.palette_size,
            "corollary1": self.corollary1,
        }


def colour_pipeline(
    g: Graph, budget: float | None = None
) -> tuple[PartialColouring, PipelineReport]:
    """Matching decomposition, per-class conflict colouring, composition.

    Tries a Delta-class edge colouring when the published guarantees say one
    exists, otherwise (or on budget exhaustion) falls back to Delta+1
    classes.  The report records which regime ran and the bound it implies.
    """
    if isinstance(planar_embed(g), NonPlanar):
        raise PreconditionError("input graph is not planar")
    delta = g.max_degree()
    if g.num_edges() == 0:
        empty = PartialColouring(g, Palette(1), checked=False)
        return empty, PipelineReport("empty", 0, 1, 0, 0, 1, False)

    wants_class1 = corollary1_applies(delta, g.girth())
    ec = None
    regime = "vizing"
    if wants_class1:
        ec = class1_edge_colour(g, budget)
        regime = "class1" if ec is not None else "vizing-fallback"
    if ec is None:
        ec = vizing_edge_colour(g)

    per_class = []
    for i, cls in ec.classes().items():
        cg = conflict_graph(g, cls)
        node_col = colour_planar_nodes(cg, budget)
        per_class.append({cg.nodes[j]: c for j, c in node_col.items()})

    col = compose(ec, per_class)
    violations = verify_strong(g, col, require_total=True)
    if violations:
        raise InternalInconsistency(f"pipeline output invalid: {violations[0]}")

    max_c = max((max(d.values()) for d in per_class if d), default=1)
    if max_c <= 4 and ec.class_count <= delta:
        bound = 4 * delta
    elif max_c <= 4:
        bound = 4 * (delta + 1)
    else:
        bound = 5 * ec.class_count
    report = PipelineReport(
        regime=regime,
        class_count=ec.class_count,
        max_c=max_c,
        colours_used=col.colours_used(),
        bound_claimed=bound,
        palette_size=col.palette.size,
        corollary1=wants_class1,
    )
    return col, report
