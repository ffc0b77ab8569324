"""Heuristic lower bounds by greedy edge addition with plateau escapes."""

from __future__ import annotations

import random
import time

from ..constructions import build_Fnk, build_Hn, build_Hnk
from ..errors import ParameterError
from ..graph_core import Graph, canonical_form, iter_bits, to_graph6
from ..patterns import count_triangles_masked, is_free_at, is_suspension_pk_free
from .records import MAX_EXHAUSTIVE_N, ExtremalRecord, SearchConfig, SearchStats


def edge_admissible(adj: list[int], u: int, w: int, k: int) -> bool:
    """Whether adding uw to a P̂_k-free graph keeps it P̂_k-free.

    Only u, w and their common neighbours see their neighbourhoods change.
    """
    adj[u] |= 1 << w
    adj[w] |= 1 << u
    try:
        if not is_free_at(adj, u, k) or not is_free_at(adj, w, k):
            return False
        for x in iter_bits(adj[u] & adj[w]):
            if not is_free_at(adj, x, k):
                return False
        return True
    finally:
        adj[u] &= ~(1 << w)
        adj[w] &= ~(1 << u)


def saturate(adj: list[int], k: int) -> list[int]:
    """Add admissible edges in lexicographic order until the graph is edge-maximal."""
    adj = list(adj)
    n = len(adj)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for w in range(u + 1, n):
                if not (adj[u] >> w) & 1 and edge_admissible(adj, u, w, k):
                    adj[u] |= 1 << w
                    adj[w] |= 1 << u
                    changed = True
    return adj


def _seed_graphs(n: int, k: int) -> list[tuple[str, Graph]]:
    seeds = []
    if n >= 4:
        seeds.append(("Hn", build_Hn(n)))
    m = (k - 2) // 2
    if n >= 4 * m and n % (4 * m) == 0:
        seeds.append(("Fnk", build_Fnk(n, k)))
    s = k // 2
    if n >= 2 * s and n % (2 * s) == 0:
        seeds.append(("Hnk", build_Hnk(n, k)))
    return seeds


def _random_bipartite(n: int, rng: random.Random) -> list[int]:
    side = [rng.random() < 0.5 for _ in range(n)]
    adj = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if side[u] != side[w] and rng.random() < 0.7:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
    return adj


class _Climber:
    def __init__(self, n: int, k: int, rng: random.Random, stats: SearchStats):
        self.n = n
        self.k = k
        self.rng = rng
        self.stats = stats

    def add_best(self, adj: list[int], tabu: dict) -> bool:
        """Add the admissible non-tabu edge of largest triangle gain; False if none."""
        n = self.n
        cands = []
        for u in range(n):
            row = adj[u]
            for w in range(u + 1, n):
                if not (row >> w) & 1 and (u, w) not in tabu:
                    cands.append((-(row & adj[w]).bit_count(), self.rng.random(), u, w))
        cands.sort()
        for _, _, u, w in cands:
            self.stats.tested += 1
            if edge_admissible(adj, u, w, self.k):
                adj[u] |= 1 << w
                adj[w] |= 1 << u
                return True
            self.stats.pruned_free += 1
        return False

    def drop_weakest(self, adj: list[int]) -> tuple[int, int] | None:
        """Remove the edge in fewest triangles (random tie-break)."""
        best = None
        for u in range(self.n):
            row = adj[u]
            for w in iter_bits(row >> (u + 1)):
                w += u + 1
                key = ((row & adj[w]).bit_count(), self.rng.random())
                if best is None or key < best[0]:
                    best = (key, u, w)
        if best is None:
            return None
        _, u, w = best
        adj[u] &= ~(1 << w)
        adj[w] &= ~(1 << u)
        return u, w


def local_search(config: SearchConfig, seeds: list[Graph] | None = None) -> ExtremalRecord:
    """Best P̂_k-free graph found by restarted greedy climbing.

    Restarts cycle through the constructions that exist for (n, k), any
    caller-supplied ``seeds``, a random bipartite graph and the empty graph.
    Each climb alternates saturation with removing the weakest edge (made
    tabu for a while) for ``4 n`` escape steps.  Deterministic for a fixed
    seed unless the wall-clock budget cuts the run short.
    """
    if config.mode != "local":
        raise ParameterError("local_search requires mode='local'")
    n, k = config.n, config.k
    rng = random.Random(config.seed)
    stats = SearchStats()
    start = time.perf_counter()
    deadline = start + config.time_budget
    climber = _Climber(n, k, rng, stats)

    starts = [g.adj for _, g in _seed_graphs(n, k)]
    starts += [g.adj for g in (seeds or []) if g.n == n and is_suspension_pk_free(g, k)]
    full = (1 << n) - 1
    best_value = -1
    best_graphs: dict[bytes | str, list[int]] = {}

    def record(adj: list[int]) -> None:
        nonlocal best_value
        t = count_triangles_masked(adj, full)
        if t < best_value:
            return
        if t > best_value:
            best_value = t
            best_graphs.clear()
        g = Graph(n, tuple(adj))
        key = canonical_form(g) if n <= MAX_EXHAUSTIVE_N else to_graph6(g)
        best_graphs.setdefault(key, list(adj))

    rounds = max(config.restarts, len(starts))
    for r in range(rounds):
        if time.perf_counter() > deadline:
            break
        stats.nodes += 1
        if r < len(starts):
            adj = list(starts[r])
        elif r % 2:
            adj = _random_bipartite(n, rng)
        else:
            adj = [0] * n
        tabu: dict[tuple[int, int], int] = {}
        for step in range(4 * n):
            while climber.add_best(adj, tabu):
                pass
            record(adj)
            if time.perf_counter() > deadline:
                break
            dropped = climber.drop_weakest(adj)
            if dropped is None:
                break
            tabu = {e: s for e, s in tabu.items() if s > step}
            tabu[dropped] = step + max(2, n // 2)
    stats.seconds = time.perf_counter() - start

    keys = sorted(best_graphs, key=lambda x: x if isinstance(x, bytes) else x.encode())
    witnesses = []
    if config.collect_witnesses:
        witnesses = [to_graph6(Graph(n, tuple(best_graphs[key])))
                     for key in keys[:config.max_witnesses]]
    return ExtremalRecord(n, k, best_value, False, witnesses, None, stats)
