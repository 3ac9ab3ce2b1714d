"""Exact strong chromatic index by branch and bound.

Ground truth for everything else in the package: the decision search is
complete, so an Unsat answer certifies that no k-colouring exists.  Intended
for desk-scale instances (up to roughly 40 edges).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .colouring import Palette, PartialColouring, trivial_lower_bound, verify_strong
from .graph import Edge, Graph


class SolverTimeout(Exception):
    pass


@dataclass
class SolveStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    chi_s: int
    witness: PartialColouring
    stats: SolveStats


def _conflict_lists(g: Graph) -> tuple[list[Edge], list[list[int]]]:
    """Edges in identity order plus, per edge, the indices of all edges
    within distance 2 (the clique structure the colouring must respect)."""
    edges = list(g.edges)
    pos = {e: i for i, e in enumerate(edges)}
    conflicts = [sorted(pos[f] for f in g.n2_edges(e)) for e in edges]
    return edges, conflicts


class _Search:
    """Backtracking with fail-first edge selection and first-use colour
    symmetry breaking: a branch may introduce at most one colour index that
    no earlier edge uses, so permuting unused colours never re-runs."""

    def __init__(self, g: Graph, k: int, deadline: float | None):
        self.edges, self.conflicts = _conflict_lists(g)
        self.k = k
        self.deadline = deadline
        self.colour = [0] * len(self.edges)
        self.max_used = 0
        self.nodes = 0

    def _free(self, i: int) -> list[int]:
        limit = min(self.k, self.max_used + 1)
        used = {self.colour[j] for j in self.conflicts[i] if self.colour[j]}
        return [c for c in range(1, limit + 1) if c not in used]

    def _pick(self) -> int | None:
        best, best_count = None, None
        for i, c in enumerate(self.colour):
            if c:
                continue
            n = len(self._free(i))
            if best_count is None or n < best_count:
                best, best_count = i, n
                if n == 0:
                    break
        return best

    def run(self) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 512 == 0:
            if time.monotonic() > self.deadline:
                raise SolverTimeout()
        i = self._pick()
        if i is None:
            return True
        prev_max = self.max_used
        for c in self._free(i):
            self.colour[i] = c
            self.max_used = max(prev_max, c)
            if self.run():
                return True
            self.colour[i] = 0
            self.max_used = prev_max
        return False


def is_strong_k_colourable(
    g: Graph, k: int, deadline: float | None = None, stats: SolveStats | None = None
) -> PartialColouring | None:
    """A total strong colouring of ``g`` with at most ``k`` colours, or None
    after the search space is exhausted."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if g.num_edges() == 0:
        return PartialColouring(g, Palette(max(k, 1)), checked=False)
    if k == 0 or k < trivial_lower_bound(g):
        return None
    search = _Search(g, k, deadline)
    found = search.run()
    if stats is not None:
        stats.nodes += search.nodes
    if not found:
        return None
    witness = PartialColouring(g, Palette(k), checked=False)
    for e, c in zip(search.edges, search.colour):
        witness.assign(e, c)
    assert not verify_strong(g, witness, require_total=True)
    return witness


def strong_chromatic_index(g: Graph, timeout: float | None = None) -> SolveResult:
    """Minimal palette size with witness, searching k upward from the trivial
    lower bound; the failed search at k-1 certifies minimality."""
    start = time.monotonic()
    deadline = start + timeout if timeout is not None else None
    stats = SolveStats()
    if g.num_edges() == 0:
        stats.elapsed = time.monotonic() - start
        return SolveResult(0, PartialColouring(g, Palette(1), checked=False), stats)
    k = max(trivial_lower_bound(g), 1)
    while True:
        witness = is_strong_k_colourable(g, k, deadline, stats)
        if witness is not None:
            stats.elapsed = time.monotonic() - start
            return SolveResult(k, witness, stats)
        k += 1
        if k > g.num_edges():
            # |E| pairwise-distinct colours always work, so this is a bug.
            raise RuntimeError("exact search failed to terminate")
