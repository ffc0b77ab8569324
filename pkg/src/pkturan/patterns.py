"""Path detection, suspension-freeness, and triangle counting.

A graph contains the suspension of P_k iff some vertex neighbourhood
contains a path on k vertices, so freeness reduces to exact path detection
on induced neighbourhoods.  All routines work on bitset rows directly; the
``*_masked`` helpers restrict the ambient graph to a vertex mask without
materialising the induced subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, PartitionError
from .graph_core import MAX_VERTICES, Graph, iter_bits


# ---------------------------------------------------------------------------
# paths

def _twin_classes(adj, allowed: int) -> dict[int, int]:
    """Map each vertex of ``allowed`` to a twin-class id.

    Two vertices are twins when swapping them is an automorphism of the
    induced subgraph (equal open or equal closed neighbourhoods).
    """
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    cls = {}
    for v in iter_bits(allowed):
        nb = adj[v] & allowed
        c = by_open.get(nb)
        if c is None:
            c = by_closed.get(nb | (1 << v))
        if c is None:
            c = v
            by_open[nb] = v
            by_closed[nb | (1 << v)] = v
        cls[v] = c
    return cls


def _reach(adj, start: int, free: int) -> int:
    """Vertices of ``free`` reachable from ``start`` through ``free``."""
    seen = 0
    frontier = adj[start] & free
    while frontier:
        seen |= frontier
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & free & ~seen
    return seen


def find_path_masked(adj, allowed: int, k: int) -> list[int] | None:
    """A path on ``k`` vertices inside the subgraph induced by ``allowed``, or None.

    Exact depth-first branch-and-bound.  A branch is cut when the current
    length plus the number of unvisited vertices still reachable from the
    endpoint falls short of ``k``; among candidate next vertices only one
    per twin class is tried.
    """
    if k < 1:
        raise ValueError(f"path order must be >= 1, got {k}")
    if allowed.bit_count() < k:
        return None
    if k == 1:
        return [(allowed & -allowed).bit_length() - 1]
    cls = _twin_classes(adj, allowed)
    path: list[int] = []

    def extend(end: int, visited: int) -> bool:
        if len(path) == k:
            return True
        free = allowed & ~visited
        if len(path) + _reach(adj, end, free).bit_count() < k:
            return False
        tried = set()
        for u in iter_bits(adj[end] & free):
            c = cls[u]
            if c in tried:
                continue
            tried.add(c)
            path.append(u)
            if extend(u, visited | (1 << u)):
                return True
            path.pop()
        return False

    small = 0
    tried_start = set()
    for s in iter_bits(allowed):
        if (small >> s) & 1:
            continue
        comp = _reach(adj, s, allowed) | (1 << s)
        if comp.bit_count() < k:
            small |= comp
            continue
        c = cls[s]
        if c in tried_start:
            continue
        tried_start.add(c)
        path.append(s)
        if extend(s, 1 << s):
            return list(path)
        path.pop()
    return None


def find_path(g: Graph, k: int) -> list[int] | None:
    return find_path_masked(g.adj, g.vertex_mask(), k)


def has_path(g: Graph, k: int) -> bool:
    """True iff ``g`` contains a (not necessarily induced) path on ``k`` vertices."""
    return find_path_masked(g.adj, g.vertex_mask(), k) is not None


# ---------------------------------------------------------------------------
# suspensions

def suspension(f: Graph) -> Graph:
    """Add an apex (index ``f.n``) adjacent to every vertex of ``f``."""
    if f.n + 1 > MAX_VERTICES:
        raise CapacityError(f"suspension would have {f.n + 1} vertices")
    full = (1 << f.n) - 1
    return Graph(f.n + 1, tuple(row | (1 << f.n) for row in f.adj) + (full,))


def suspension_witness(g: Graph, k: int) -> tuple[int, list[int]] | None:
    """Return ``(v, path)`` with ``path`` a P_k inside N(v), or None if P̂_k-free."""
    if k < 2:
        raise ValueError(f"suspension path order must be >= 2, got {k}")
    adj = g.adj
    cls = _twin_classes(adj, g.vertex_mask())
    seen = set()
    for v in range(g.n):
        if cls[v] in seen:
            continue
        seen.add(cls[v])
        if adj[v].bit_count() < k:
            continue
        p = find_path_masked(adj, adj[v], k)
        if p is not None:
            return v, p
    return None


def is_suspension_pk_free(g: Graph, k: int) -> bool:
    """True iff no vertex neighbourhood of ``g`` contains a path on ``k`` vertices."""
    return suspension_witness(g, k) is None


def is_free_at(adj, v: int, k: int) -> bool:
    """Whether N(v) is P_k-free in the graph given by rows ``adj``."""
    nb = adj[v]
    return nb.bit_count() < k or find_path_masked(adj, nb, k) is None


# ---------------------------------------------------------------------------
# triangles

def count_triangles_masked(adj, mask: int) -> int:
    """Triangles of the subgraph induced by ``mask``.

    Edges are oriented from lower to higher (degree, index) rank, so each
    triangle is counted exactly once at its lowest-ranked vertex.
    """
    verts = sorted(iter_bits(mask), key=lambda v: ((adj[v] & mask).bit_count(), v))
    higher = mask
    out = {}
    for v in verts:
        higher &= ~(1 << v)
        out[v] = adj[v] & higher
    total = 0
    for v in verts:
        ov = out[v]
        for u in iter_bits(ov):
            total += (ov & out[u]).bit_count()
    return total


def count_triangles(g: Graph) -> int:
    return count_triangles_masked(g.adj, g.vertex_mask())


def count_triangles_at(g: Graph, v: int) -> int:
    """Triangles through ``v``, i.e. the number of edges inside N(v)."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for graph on {g.n} vertices")
    nb = g.adj[v]
    return sum((g.adj[u] & nb).bit_count() for u in iter_bits(nb)) // 2


@dataclass(frozen=True)
class Bipartition:
    part1: int
    part2: int

    @classmethod
    def from_part1(cls, n: int, vertices) -> Bipartition:
        m = 0
        for v in vertices:
            m |= 1 << v
        return cls(m, ((1 << n) - 1) & ~m)

    def validate(self, n: int) -> None:
        full = (1 << n) - 1
        if self.part1 & self.part2:
            raise PartitionError("parts overlap")
        if (self.part1 | self.part2) != full:
            raise PartitionError(f"parts do not cover all {n} vertices")


@dataclass(frozen=True)
class TriangleClassification:
    t1: int
    t2: int
    t3: int

    @property
    def total(self) -> int:
        return self.t1 + self.t2 + self.t3


def _cross(adj, inside: int, other: int) -> int:
    # triangles with an edge inside `inside` and apex in `other`
    total = 0
    for u in iter_bits(inside):
        for w in iter_bits(adj[u] & inside & ~((1 << (u + 1)) - 1)):
            total += (adj[u] & adj[w] & other).bit_count()
    return total


def classify_triangles(g: Graph, b: Bipartition) -> TriangleClassification:
    """Split t(G) into triangles with two vertices in part1, two in part2, or all in one part."""
    b.validate(g.n)
    adj = g.adj
    return TriangleClassification(
        t1=_cross(adj, b.part1, b.part2),
        t2=_cross(adj, b.part2, b.part1),
        t3=count_triangles_masked(adj, b.part1) + count_triangles_masked(adj, b.part2),
    )
