"""Closed-form bounds on ex(n, K3, P̂_k) and related Turán-type quantities.

Everything is exact: integers or :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ParameterError

P5HAT_CAVEAT = "p5hat_upper is only proven for n >= 4*(4k)^6; tabulated unconditionally"
LOWER_CAVEAT = "lower bound requires n to be a multiple of 4*floor((k-2)/2)"


def proposition_bounds(n: int, k: int) -> tuple[int, Fraction, bool]:
    """Construction lower bound, general upper bound, and whether the lower bound applies.

    lower = floor((k-2)/2) * n^2 / 8 (rounded down when n is not a valid
    multiple, in which case ``applicable`` is False);
    upper = (k-2) n^2 / 12 + (k-2)^2 n / 12.
    """
    if k < 4 or n < k:
        raise ParameterError(f"need n >= k >= 4, got n={n}, k={k}")
    m = (k - 2) // 2
    lower = m * n * n // 8
    applicable = n % (4 * m) == 0
    upper = Fraction((k - 2) * n * n, 12) + Fraction((k - 2) ** 2 * n, 12)
    return lower, upper, applicable


def erdos_gallai_bound(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Upper bounds on ex(n, P_k): ``n/(k-1) * C(k-1, 2)`` and ``(k-2) n / 2``."""
    if k < 2:
        raise ParameterError(f"path order must be >= 2, got {k}")
    tight = Fraction(n, k - 1) * comb(k - 1, 2)
    loose = Fraction((k - 2) * n, 2)
    return tight, loose


def f_function(n: int, k: int) -> tuple[int, int]:
    """max over n0 in [0, n] of n0 (n - n0) + floor((k-1) n0 / 2), with the smallest maximiser."""
    if n < 0 or k < 1:
        raise ParameterError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    best, arg = -1, 0
    for n0 in range(n + 1):
        val = n0 * (n - n0) + (k - 1) * n0 // 2
        if val > best:
            best, arg = val, n0
    return best, arg


def p5hat_turan_upper(n: int) -> int:
    """floor(n^2/4) + floor((n+1)/4), the edge bound for P̂_5-free graphs."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return n * n // 4 + (n + 1) // 4


@dataclass
class BoundsReport:
    n: int
    k: int
    lower: int
    lower_applicable: bool
    upper: Fraction
    eg_tight: Fraction
    eg_loose: Fraction
    f_value: int
    f_argmax: int
    p5hat_upper: int | None
    caveats: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "lower_applicable": self.lower_applicable,
            "upper_num": self.upper.numerator,
            "upper_den": self.upper.denominator,
            "eg_tight": str(self.eg_tight),
            "eg_loose": str(self.eg_loose),
            "f_value": self.f_value,
            "f_argmax": self.f_argmax,
            "p5hat_upper": self.p5hat_upper,
            "caveats": list(self.caveats),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def bounds_report(n: int, k: int) -> BoundsReport:
    lower, upper, applicable = proposition_bounds(n, k)
    tight, loose = erdos_gallai_bound(n, k)
    f_value, f_arg = f_function(n, k)
    caveats = []
    if not applicable:
        caveats.append(LOWER_CAVEAT)
    p5 = None
    if k == 5:
        p5 = p5hat_turan_upper(n)
        caveats.append(P5HAT_CAVEAT)
    return BoundsReport(n, k, lower, applicable, upper, tight, loose, f_value, f_arg, p5, caveats)


def path_turan_cap(n: int, k: int) -> int:
    """Integer cap on the edge count of a P_k-free graph on n vertices."""
    if k < 2:
        raise ParameterError(f"path order must be >= 2, got {k}")
    return int(erdos_gallai_bound(n, k)[0])
