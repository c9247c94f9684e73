"""Closed-form lower bounds on independence and clique numbers, the Turan
graph construction, the family-sharpened bounds, and a per-graph comparison
report.

All rational bounds are computed exactly with :class:`fractions.Fraction`, so
dominance comparisons in tests are exact; only the mean-square-degree clique
bound needs floating point (a square root).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import OutsideFamilyError
from .exact import max_clique, max_independent_set
from .formats import encode_graph6
from .graph import Graph, complete_multipartite, degree_sequence
from .recognition import (
    clique_union_profile_from_degrees,
    is_clique_union,
    is_complete_multipartite,
    multipartite_profile_from_degrees,
)
from .sequences import DegreeSequence

REPORT_SCHEMA_VERSION = 1


def caro_wei(degrees: DegreeSequence) -> Fraction:
    """Independence bound: sum of 1/(d_i + 1), exact."""
    total = Fraction(0)
    for d in degrees:
        total += Fraction(1, d + 1)
    return total


def turan_alpha(n: int, m: int) -> Fraction:
    """Independence bound n^2 / (n + 2m)."""
    if n < 1:
        raise ValueError("turan_alpha needs at least one vertex")
    return Fraction(n * n, n + 2 * m)


def hansen_zheng(n: int, m: int) -> int:
    """Independence bound ceil((2n - 2m/t) / (t + 1)) with t = floor(2m/n).

    For t = 0 (average degree below one) the formula degenerates; the value
    is then n - m, which every graph attains by dropping one endpoint per
    edge and equals the edgeless limit n at m = 0.
    """
    if n < 1:
        raise ValueError("hansen_zheng needs at least one vertex")
    t = (2 * m) // n
    if t == 0:
        return n - m
    return math.ceil(Fraction(2 * n * t - 2 * m, t * (t + 1)))


def myers_liu(n: int, m: int) -> Fraction:
    """Clique bound n^2 / (n^2 - 2m)."""
    if n < 1:
        raise ValueError("myers_liu needs at least one vertex")
    return Fraction(n * n, n * n - 2 * m)


def edwards_elphick(degrees: DegreeSequence) -> float:
    """Clique bound n / (n - sqrt(mean of d_i^2))."""
    n = degrees.n
    if n < 1:
        raise ValueError("edwards_elphick needs at least one vertex")
    mean_square = sum(d * d for d in degrees) / n
    return n / (n - math.sqrt(mean_square))


def turan_graph(n: int, k: int) -> Graph:
    """Complete k-partite graph on n vertices with parts of size floor(n/k)
    and ceil(n/k)."""
    sizes = turan_part_sizes(n, k)
    return complete_multipartite(sizes)


def turan_part_sizes(n: int, k: int) -> tuple[int, ...]:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    big = n % k
    return tuple([n // k] * (k - big) + [n // k + 1] * big)


def turan_edge_count(n: int, k: int) -> int:
    """Edge count of the Turan graph, from its part sizes."""
    sizes = turan_part_sizes(n, k)
    return (n * n - sum(a * a for a in sizes)) // 2


def sharpened_alpha_bound(g: Graph) -> int:
    """For g degree-equivalent to a union of k cliques: k if g is that clique
    union itself (where the independence number is exactly k), else k + 1."""
    profile = clique_union_profile_from_degrees(degree_sequence(g))
    if profile is None:
        raise OutsideFamilyError(
            "degree sequence does not match any disjoint clique union"
        )
    if is_clique_union(g) is not None:
        return profile.k
    return profile.k + 1


def sharpened_omega_bound(g: Graph) -> int:
    """For g degree-equivalent to a complete k-partite graph: k if g is that
    graph itself (clique number exactly k), else k + 1."""
    profile = multipartite_profile_from_degrees(degree_sequence(g))
    if profile is None:
        raise OutsideFamilyError(
            "degree sequence does not match any complete multipartite graph"
        )
    if is_complete_multipartite(g) is not None:
        return profile.k
    return profile.k + 1


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one graph, plus exact numbers when computed.

    When exact values are present, every independence bound is at most
    ``exact_alpha`` and every clique bound at most ``exact_omega``.
    """

    graph_id: str
    n: int
    m: int
    caro_wei: Fraction
    turan_alpha: Fraction
    hansen_zheng: int
    myers_liu: Fraction
    edwards_elphick: float
    sharpened_alpha: int | None
    sharpened_omega: int | None
    exact_alpha: int | None
    exact_omega: int | None

    CSV_COLUMNS = (
        "schema_version",
        "graph_id",
        "n",
        "m",
        "caro_wei",
        "turan_alpha",
        "hansen_zheng",
        "myers_liu",
        "edwards_elphick",
        "sharpened_alpha",
        "sharpened_omega",
        "exact_alpha",
        "exact_omega",
    )

    def to_json_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "caro_wei": str(self.caro_wei),
            "turan_alpha": str(self.turan_alpha),
            "hansen_zheng": self.hansen_zheng,
            "myers_liu": str(self.myers_liu),
            "edwards_elphick": self.edwards_elphick,
            "sharpened_alpha": self.sharpened_alpha,
            "sharpened_omega": self.sharpened_omega,
            "exact_alpha": self.exact_alpha,
            "exact_omega": self.exact_omega,
        }

    def to_csv_row(self) -> list[str]:
        def cell(value) -> str:
            if value is None:
                return ""
            return repr(value) if isinstance(value, float) else str(value)

        data = self.to_json_dict()
        data["edwards_elphick"] = self.edwards_elphick
        return [cell(data[col]) for col in self.CSV_COLUMNS]


def compare_bounds(g: Graph, with_exact: bool = False, cap: int = 64) -> BoundReport:
    """Evaluate every bound on ``g``; sharpened bounds are None outside their
    family, exact values are None unless requested."""
    degrees = degree_sequence(g)
    n, m = g.n, g.m
    try:
        sharp_alpha: int | None = sharpened_alpha_bound(g)
    except OutsideFamilyError:
        sharp_alpha = None
    try:
        sharp_omega: int | None = sharpened_omega_bound(g)
    except OutsideFamilyError:
        sharp_omega = None
    exact_alpha = exact_omega = None
    if with_exact:
        exact_alpha = max_independent_set(g, cap=cap).size
        exact_omega = max_clique(g, cap=cap).size
    return BoundReport(
        graph_id=encode_graph6(g),
        n=n,
        m=m,
        caro_wei=caro_wei(degrees),
        turan_alpha=turan_alpha(n, m),
        hansen_zheng=hansen_zheng(n, m),
        myers_liu=myers_liu(n, m),
        edwards_elphick=edwards_elphick(degrees),
        sharpened_alpha=sharp_alpha,
        sharpened_omega=sharp_omega,
        exact_alpha=exact_alpha,
        exact_omega=exact_omega,
    )
