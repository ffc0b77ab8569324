"""Exact ex(n, K3, P̂_k) for small n by isomorph-free exhaustive generation.

Free graphs are grown one vertex at a time by canonical augmentation: a
child is kept only if its new vertex lies in the automorphism orbit of the
designated vertex, namely the last vertex in canonical order among those
with minimal (degree, triangles through it).  P̂_k-freeness is hereditary
for induced subgraphs, so children containing P̂_k are discarded at once.

The last vertex is not augmented canonically.  Every free graph on n
vertices is some free graph P on n - 1 vertices plus a vertex whose
neighbourhood S is admissible, and t(P + S) = t(P) + e(P[S]).  So each
parent is scored over its admissible sets, which form a down-closed
family.  Only maximal sets can be extremal and edge-maximal, and those are
the graphs kept as witnesses after saturation.

Branch-and-bound: each added vertex lies in at most ex(n - 1, P_k)
triangles, so a node on m vertices whose count plus that cap times the
number of missing vertices stays below a known achievable value is dropped.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..bounds import path_turan_cap
from ..errors import CapacityError, ParameterError
from ..graph_core import Graph, canonical_labeling, from_graph6, iter_bits, to_graph6
from ..patterns import count_triangles_masked, find_path_masked, is_free_at
from .local import local_search, saturate
from .records import MAX_EXHAUSTIVE_N, ExtremalRecord, SearchConfig, SearchStats

SPLIT_DEPTH = 6


class _OutOfTime(Exception):
    pass


def _extension_ok(adj, m: int, s: int, y: int, k: int | None) -> bool:
    """Adding y to the new vertex's neighbourhood S keeps the child P̂_k-free.

    Assumes the child with neighbourhood S is free; only the new vertex, y,
    and members of S adjacent to y can acquire a path.
    """
    if k is None:
        return True
    s2 = s | (1 << y)
    child = [row | (1 << m) if (s2 >> x) & 1 else row for x, row in enumerate(adj)]
    child.append(s2)
    if s2.bit_count() >= k and find_path_masked(child, s2, k) is not None:
        return False
    for x in iter_bits((adj[y] & s) | (1 << y)):
        if not is_free_at(child, x, k):
            return False
    return True


def _admissible_sets(adj, m: int, k: int | None, stats: SearchStats, start: int = 0, s: int = 0):
    """Every admissible neighbourhood S (as a bitmask) for a new vertex m."""
    yield s
    for y in range(start, m):
        stats.tested += 1
        if _extension_ok(adj, m, s, y, k):
            yield from _admissible_sets(adj, m, k, stats, y + 1, s | (1 << y))
        else:
            stats.pruned_free += 1


def _invariants(adj) -> list[tuple[int, int]]:
    inv = []
    for row in adj:
        t = 0
        for u in iter_bits(row):
            t += (adj[u] & row).bit_count()
        inv.append((row.bit_count(), t // 2))
    return inv


def _children(adj: tuple[int, ...], k: int | None, stats: SearchStats):
    """Canonical children of ``adj`` (each isomorphism class exactly once)."""
    m = len(adj)
    seen = set()
    for s in _admissible_sets(adj, m, k, stats):
        d = s.bit_count()
        # cheap reject: new vertex must have minimum degree
        if any((row.bit_count() + ((s >> x) & 1)) < d for x, row in enumerate(adj)):
            stats.pruned_canon += 1
            continue
        child = tuple(row | (1 << m) if (s >> x) & 1 else row for x, row in enumerate(adj)) + (s,)
        inv = _invariants(child)
        low = min(inv)
        if inv[m] != low:
            stats.pruned_canon += 1
            continue
        classes = sorted(set(inv))
        cells = [[v for v in range(m + 1) if inv[v] == c] for c in classes]
        form, order, orbits = canonical_labeling(Graph(m + 1, child), cells)
        designated = next(v for v in reversed(order) if inv[v] == low)
        if orbits[m] != orbits[designated] or form in seen:
            stats.pruned_canon += 1
            continue
        seen.add(form)
        yield child


def iter_classes(n: int, k: int | None = None):
    """Yield one adjacency tuple per isomorphism class of (P̂_k-free, if k given) graphs on n vertices."""
    if n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"class generation supports n <= {MAX_EXHAUSTIVE_N}, got {n}")
    if n == 0:
        yield ()
        return
    stats = SearchStats()

    def rec(adj):
        if len(adj) == n:
            yield adj
            return
        for child in _children(adj, k, stats):
            yield from rec(child)

    yield from rec((0,))


@dataclass
class _Worker:
    n: int
    k: int
    threshold: int
    deadline: float
    stats: SearchStats = field(default_factory=SearchStats)
    best: int = -1
    forms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.cap = path_turan_cap(self.n - 1, self.k)
        self.best = self.threshold

    def _bound_ok(self, adj) -> bool:
        missing = self.n - len(adj)
        t = count_triangles_masked(adj, (1 << len(adj)) - 1)
        if t + missing * self.cap < self.best:
            self.stats.pruned_bound += 1
            return False
        return True

    def descend(self, adj) -> None:
        if time.perf_counter() > self.deadline:
            raise _OutOfTime
        self.stats.nodes += 1
        if not self._bound_ok(adj):
            return
        if len(adj) == self.n - 1:
            self.score_parent(adj)
            return
        for child in _children(adj, self.k, self.stats):
            self.descend(child)

    def score_parent(self, adj) -> None:
        m = len(adj)
        k = self.k
        t_parent = count_triangles_masked(adj, (1 << m) - 1)
        stats = self.stats

        def edges_in(s):
            return sum((adj[x] & s).bit_count() for x in iter_bits(s)) // 2

        def rec(s: int, start: int):
            score = t_parent + edges_in(s)
            rest = s | (((1 << m) - 1) & ~((1 << start) - 1))
            if t_parent + edges_in(rest) < self.best:
                stats.pruned_bound += 1
                return
            extended = False
            for y in range(start, m):
                stats.tested += 1
                if _extension_ok(adj, m, s, y, k):
                    extended = True
                    rec(s | (1 << y), y + 1)
                else:
                    stats.pruned_free += 1
            if extended or score < self.best:
                return
            for y in range(start):
                if not (s >> y) & 1 and _extension_ok(adj, m, s, y, k):
                    return
            self.offer(adj, s)

        rec(0, 0)

    def offer(self, adj, s: int) -> None:
        m = len(adj)
        child = [row | (1 << m) if (s >> x) & 1 else row for x, row in enumerate(adj)]
        child.append(s)
        child = saturate(child, self.k)
        t = count_triangles_masked(child, (1 << self.n) - 1)
        if t < self.best:
            return
        if t > self.best:
            self.best = t
            self.forms.clear()
        form = canonical_labeling(Graph(self.n, tuple(child)))[0]
        self.forms.setdefault(form, None)


def _run_subtrees(args):
    n, k, threshold, deadline, roots = args
    w = _Worker(n, k, threshold, deadline)
    finished = True
    try:
        for adj in roots:
            w.descend(adj)
    except _OutOfTime:
        finished = False
    return w.best, list(w.forms), w.stats, finished


def exhaustive_search(config: SearchConfig) -> ExtremalRecord:
    """Exact maximum triangle count over P̂_k-free graphs on ``config.n`` vertices.

    A record with ``exact=False`` is returned if the wall-clock budget runs
    out; its value is then the best verified graph seen so far.
    """
    if config.mode != "exhaustive":
        raise ParameterError("exhaustive_search requires mode='exhaustive'")
    n, k = config.n, config.k
    if n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"exhaustive search supports n <= {MAX_EXHAUSTIVE_N}, got {n}")
    t0 = time.perf_counter()
    deadline = t0 + config.time_budget

    # achievable starting value: prunes the tree, never cuts an extremal graph
    seed_cfg = SearchConfig(n, k, mode="local", seed=config.seed, restarts=4,
                            time_budget=max(1.0, config.time_budget / 20), max_witnesses=1)
    seed_rec = local_search(seed_cfg)
    threshold = seed_rec.value
    fallback = seed_rec.witnesses[0]

    stats = SearchStats()
    if n == 1:
        best, forms, finished = 0, [b"@"], True
    else:
        best, forms, finished = _run(n, k, threshold, deadline, config.workers, stats)
    stats.seconds = time.perf_counter() - t0

    if not forms:
        # only when the run stopped before any parent was scored
        best, forms = threshold, []
        witnesses = [fallback] if config.collect_witnesses else []
        return ExtremalRecord(n, k, best, False, witnesses, None, stats)
    forms = sorted(set(forms))
    witnesses = []
    if config.collect_witnesses:
        witnesses = [f.decode("ascii") for f in forms[:config.max_witnesses]]
    return ExtremalRecord(n, k, best, finished, witnesses, len(forms) if finished else None, stats)


def _run(n, k, threshold, deadline, workers, stats):
    if workers <= 1 or n - 1 <= SPLIT_DEPTH:
        best, forms, st, finished = _run_subtrees((n, k, threshold, deadline, [(0,)]))
        stats.merge(st)
        return best, forms, finished

    # frontier of canonical nodes at a fixed depth, each an independent subtree
    frontier = [(0,)]
    cap = path_turan_cap(n - 1, k)
    for _ in range(SPLIT_DEPTH - 1):
        nxt = []
        for adj in frontier:
            stats.nodes += 1
            for child in _children(adj, k, stats):
                t = count_triangles_masked(child, (1 << len(child)) - 1)
                if t + (n - len(child)) * cap < threshold:
                    stats.pruned_bound += 1
                    continue
                nxt.append(child)
        frontier = nxt
    chunks = [frontier[i::workers * 4] for i in range(workers * 4)]
    best, forms, finished = threshold, {}, True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for b, fs, st, done in pool.map(_run_subtrees,
                                        [(n, k, threshold, deadline, c) for c in chunks if c]):
            stats.merge(st)
            finished = finished and done
            if b > best:
                best, forms = b, {}
            if b == best:
                forms.update(dict.fromkeys(fs))
    return best, list(forms), finished


def is_isomorphic_to(g6: str, other: Graph) -> bool:
    g = from_graph6(g6)
    if g.n != other.n:
        return False
    return canonical_labeling(g)[0] == canonical_labeling(other)[0]


def graph6_of_adj(adj) -> str:
    return to_graph6(Graph(len(adj), tuple(adj)))
