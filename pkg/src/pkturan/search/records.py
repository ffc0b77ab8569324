"""Search configuration, result records, and independent witness checking."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..errors import CapacityError, ParameterError
from ..graph_core import from_graph6
from ..patterns import count_triangles, is_suspension_pk_free

MAX_EXHAUSTIVE_N = 12
MAX_LOCAL_N = 512


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    mode: str = "exhaustive"
    seed: int = 0
    time_budget: float = 600.0
    restarts: int = 24
    collect_witnesses: bool = True
    max_witnesses: int = 10
    workers: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "local"):
            raise ParameterError(f"mode must be 'exhaustive' or 'local', got {self.mode!r}")
        if self.k < 4:
            raise ParameterError(f"k must be >= 4, got {self.k}")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.mode == "exhaustive" and self.n > MAX_EXHAUSTIVE_N:
            raise CapacityError(f"exhaustive search supports n <= {MAX_EXHAUSTIVE_N}, got {self.n}")
        if self.mode == "local" and self.n > MAX_LOCAL_N:
            raise CapacityError(f"local search supports n <= {MAX_LOCAL_N}, got {self.n}")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class WitnessReport:
    n: int
    edges: int
    free: bool
    triangles: int


def verify_witness(g6: str | bytes, k: int) -> WitnessReport:
    """Decode a graph6 string and recheck freeness and triangle count from scratch."""
    g = from_graph6(g6)
    return WitnessReport(g.n, g.num_edges(), is_suspension_pk_free(g, k), count_triangles(g))


@dataclass
class SearchStats:
    nodes: int = 0
    tested: int = 0
    pruned_free: int = 0
    pruned_canon: int = 0
    pruned_bound: int = 0
    seconds: float = 0.0

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.tested += other.tested
        self.pruned_free += other.pruned_free
        self.pruned_canon += other.pruned_canon
        self.pruned_bound += other.pruned_bound


@dataclass
class ExtremalRecord:
    n: int
    k: int
    value: int
    exact: bool
    witnesses: list[str]
    witness_count_total: int | None
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self):
        for w in self.witnesses:
            rep = verify_witness(w, self.k)
            if rep.n != self.n or not rep.free or rep.triangles != self.value:
                raise ValueError(f"witness {w!r} fails verification: {rep}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "exact": self.exact,
            "witnesses": list(self.witnesses),
            "witness_count_total": self.witness_count_total,
            "stats": asdict(self.stats),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> ExtremalRecord:
        return cls(d["n"], d["k"], d["value"], d["exact"], list(d["witnesses"]),
                   d.get("witness_count_total"), SearchStats(**d.get("stats", {})))
