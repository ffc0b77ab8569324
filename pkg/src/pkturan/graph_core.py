"""Simple undirected graphs stored as per-vertex bitset rows.

Each row is a Python ``int`` whose bit ``j`` is set iff the edge ``{i, j}``
is present, so neighbourhood intersection is a single ``&`` and degree
counts are ``int.bit_count``.  Graph values are immutable; every mutator
returns a new graph.

Also provides graph6 serialisation and an exact canonical form
(individualisation-refinement with automorphism pruning) for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, Graph6Error, LoopError

MAX_VERTICES = 4096
MAX_CANON_VERTICES = 16


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def add_edge(self, i: int, j: int) -> Graph:
        return add_edge(self, i, j)

    def remove_edge(self, i: int, j: int) -> Graph:
        self._check_vertex(i)
        self._check_vertex(j)
        adj = list(self.adj)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            mask = 0
            for u in iter_bits(row):
                mask |= 1 << perm[u]
            adj[perm[v]] = mask
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``vertices`` plus the new-index -> old-vertex map."""
        verts = sorted(set(vertices))
        for v in verts:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            mask = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    mask |= 1 << pos[u]
            adj.append(mask)
        return Graph(len(verts), tuple(adj)), verts

    def check_invariants(self) -> None:
        """Raise AssertionError unless rows are symmetric, loop-free and in range."""
        assert len(self.adj) == self.n
        full = self.vertex_mask()
        for i, row in enumerate(self.adj):
            assert row & ~full == 0, f"row {i} has bits beyond n"
            assert not (row >> i) & 1, f"loop at {i}"
            for j in iter_bits(row):
                assert (self.adj[j] >> i) & 1, f"asymmetric edge {i}-{j}"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges()})"


def new_graph(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    if n < 0 or n > MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    return Graph(n, (0,) * n)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    if i == j:
        raise LoopError(f"loop at vertex {i}")
    g._check_vertex(i)
    g._check_vertex(j)
    if (g.adj[i] >> j) & 1:
        return g
    adj = list(g.adj)
    adj[i] |= 1 << j
    adj[j] |= 1 << i
    return Graph(g.n, tuple(adj))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list (duplicates ignored)."""
    g = new_graph(n)
    adj = list(g.adj)
    for i, j in edges:
        if i == j:
            raise LoopError(f"loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"edge ({i}, {j}) out of range for n={n}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def neighborhood_induced(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """G[N(v)] together with the map from its indices back to vertices of ``g``."""
    g._check_vertex(v)
    return g.induced(iter_bits(g.adj[v]))


# ---------------------------------------------------------------------------
# graph6

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(s: str | bytes) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.rstrip(b"\r\n")
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
    for off in range(start, len(data)):
        if not 63 <= data[off] <= 126:
            raise Graph6Error(f"byte {data[off]!r} outside graph6 range 63..126", off)
    if start >= len(data):
        raise Graph6Error("empty graph6 string", start)
    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if len(data) < pos + 8:
            raise Graph6Error("truncated 8-byte size header", len(data))
        n = 0
        for b in data[pos + 2:pos + 8]:
            n = (n << 6) | (b - 63)
        pos += 8
    else:
        if len(data) < pos + 4:
            raise Graph6Error("truncated 4-byte size header", len(data))
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 declares {n} vertices; maximum is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"body has {len(body)} bytes, expected {need}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 body", pos + need)
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if (val >> shift) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    """Read one graph per non-empty line."""
    graphs = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(from_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
    return graphs


def write_graph6_file(path, graphs: Iterable[Graph | str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write((g if isinstance(g, str) else to_graph6(g)) + "\n")


# ---------------------------------------------------------------------------
# canonical labelling

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    All cells are split simultaneously by their neighbour-count vector, with
    sub-cells ordered by that vector, so the result depends only on the
    isomorphism type of (graph, ordered partition).
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << pos[u]
        rows.append(m)
    return tuple(rows)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbits(n: int, gens: Iterable[Sequence[int]]) -> list[int]:
    parent = list(range(n))
    for g in gens:
        for v in range(n):
            a, b = _find(parent, v), _find(parent, g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [_find(parent, v) for v in range(n)]


class _CanonSearch:
    """One canonical-labelling search over the refinement tree.

    Two prunings keep it polynomial on symmetric inputs: skipping children in
    the same orbit (under automorphisms found so far that fix the current
    individualised prefix), and jumping back to the divergence point whenever
    a leaf is equivalent to the first leaf.
    """

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.first_path: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.first_order: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def _auto(self, src: Sequence[int], dst: Sequence[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.n)):
            self.autos.append(gamma)

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(self.adj, cells)
        depth = len(path)
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = _certificate(self.adj, order)
            if self.first_cert is None:
                self.first_path = list(path)
                self.first_cert = self.best_cert = cert
                self.first_order = self.best_order = order
                return None
            if cert == self.first_cert:
                self._auto(self.first_order, order)
                common = 0
                for a, b in zip(path, self.first_path):
                    if a != b:
                        break
                    common += 1
                return common
            if cert > self.best_cert:
                self.best_cert = cert
                self.best_order = order
            elif cert == self.best_cert:
                self._auto(self.best_order, order)
            return None

        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                gens = [g for g in self.autos if all(g[p] == p for p in path)]
                if gens:
                    orb = _orbits(self.n, gens)
                    if any(orb[v] == orb[t] for t in tried):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            back = self.run(child, path + [v])
            tried.append(v)
            if back is not None and back < depth:
                return back
        return None


def canonical_labeling(g: Graph, cells: list[list[int]] | None = None):
    """Canonical labelling of ``g``.

    Returns ``(form, order, orbits)``: ``form`` is the graph6 encoding (as
    bytes) of the canonically relabelled graph, ``order[p]`` is the vertex
    placed at canonical position ``p``, and ``orbits[v]`` is the smallest
    vertex in the automorphism orbit of ``v``.  An optional initial ordered
    partition ``cells`` restricts labellings to colour-preserving ones.
    """
    if g.n > MAX_CANON_VERTICES:
        raise CapacityError(f"canonical form supports n <= {MAX_CANON_VERTICES}, got {g.n}")
    if g.n == 0:
        return b"?", [], []
    if cells is None:
        cells = [list(range(g.n))]
    search = _CanonSearch(g.adj, g.n)
    search.run([list(c) for c in cells if c], [])
    order = search.best_order
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    form = to_graph6(g.relabel(pos)).encode("ascii")
    return form, order, _orbits(g.n, search.autos)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 16)."""
    return canonical_labeling(g)[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)
