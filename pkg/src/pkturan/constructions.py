"""Extremal constructions for triangles in P̂_k-free graphs.

Every construction is a complete bipartite graph with parts A = [0, |A|)
and B = [|A|, n), plus extra structure inside one part laid out in
consecutive index runs:

* ``Hn``  : a perfect matching inside one part of an almost balanced K_{a,b}.
* ``Fnk`` : disjoint balanced complete bipartite blocks K_{m,m} inside A,
  m = floor((k-2)/2).
* ``Hnk`` : disjoint cliques K_s inside A, s = floor(k/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ParameterError
from .graph_core import MAX_VERTICES, Graph, from_edges
from .patterns import Bipartition

KINDS = ("Hn", "Fnk", "Hnk")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown construction {self.kind!r}; expected one of {KINDS}")
        if self.kind == "Hn":
            _check_hn(self.n)
        elif self.kind == "Fnk":
            _check_fnk(self.n, self.k)
        else:
            _check_hnk(self.n, self.k)

    def build(self) -> Graph:
        return {"Hn": lambda: build_Hn(self.n),
                "Fnk": lambda: build_Fnk(self.n, self.k),
                "Hnk": lambda: build_Hnk(self.n, self.k)}[self.kind]()

    def triangle_formula(self) -> int:
        if self.kind == "Hn":
            return triangles_Hn_formula(self.n)
        if self.kind == "Fnk":
            return triangles_Fnk_formula(self.n, self.k)
        return triangles_Hnk_formula(self.n, self.k)


def _check_n(n: int) -> None:
    if n > MAX_VERTICES:
        raise ParameterError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")


def _check_hn(n: int) -> None:
    if n < 4:
        raise ParameterError(f"Hn needs n >= 4, got {n}")
    _check_n(n)


def _check_k(k) -> None:
    if k is None or k < 4:
        raise ParameterError(f"k must be >= 4, got {k}")


def _check_fnk(n: int, k: int) -> int:
    _check_k(k)
    m = (k - 2) // 2
    if n < 4 * m or n % (4 * m):
        raise ParameterError(f"n must be a multiple of {4 * m} for Fnk with k={k}, got n={n}")
    _check_n(n)
    return m


def _check_hnk(n: int, k: int) -> int:
    _check_k(k)
    s = k // 2
    if n < 2 * s or n % (2 * s):
        raise ParameterError(f"n must be a multiple of {2 * s} for Hnk with k={k}, got n={n}")
    _check_n(n)
    return s


def _complete_bipartite(a: int, n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(a) for j in range(a, n)]


def hn_parts(n: int) -> tuple[int, int, int]:
    """Layout of Hn as ``(size_of_A, matched_start, matched_stop)``."""
    _check_hn(n)
    q, r = divmod(n, 4)
    if r == 3:
        a = 2 * q + 1
        return a, a, n
    a = 2 * q
    return a, 0, a


def build_Hn(n: int) -> Graph:
    """K_{a,n-a} with a perfect matching inside one part.

    n = 4q, 4q+1, 4q+2: A has 2q vertices and carries the matching.
    n = 4q+3: A has 2q+1 vertices and the larger part B (2q+2) is matched.
    """
    a, lo, hi = hn_parts(n)
    edges = _complete_bipartite(a, n)
    edges += [(v, v + 1) for v in range(lo, hi, 2)]
    return from_edges(n, edges)


def triangles_Hn_formula(n: int) -> int:
    _check_hn(n)
    return n * n // 8


def build_Fnk(n: int, k: int) -> Graph:
    m = _check_fnk(n, k)
    half = n // 2
    edges = _complete_bipartite(half, n)
    for start in range(0, half, 2 * m):
        edges += [(start + i, start + m + j) for i in range(m) for j in range(m)]
    return from_edges(n, edges)


def triangles_Fnk_formula(n: int, k: int) -> int:
    m = _check_fnk(n, k)
    value = Fraction(m * n * n, 8)
    assert value.denominator == 1
    return int(value)


def build_Hnk(n: int, k: int) -> Graph:
    s = _check_hnk(n, k)
    half = n // 2
    edges = _complete_bipartite(half, n)
    for start in range(0, half - s + 1, s):
        edges += [(start + i, start + j) for i in range(s) for j in range(i + 1, s)]
    return from_edges(n, edges)


def triangles_Hnk_formula(n: int, k: int) -> int:
    """|B| * e(A) + (number of cliques) * C(s, 3), with |B| = n/2."""
    s = _check_hnk(n, k)
    edges_in_a = Fraction(n, 4 * s) * s * (s - 1)
    value = Fraction(n, 2) * edges_in_a + Fraction(n, 2 * s) * comb(s, 3)
    assert value.denominator == 1
    return int(value)


def construction_parts(spec: ConstructionSpec) -> Bipartition:
    """The (A, B) bipartition with part1 = A."""
    if spec.kind == "Hn":
        a = hn_parts(spec.n)[0]
    else:
        a = spec.n // 2
    return Bipartition.from_part1(spec.n, range(a))
