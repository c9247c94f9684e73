"""Exact independence and clique numbers with certificates.

The solver is a bitset branch-and-bound over independent sets: it branches on
the vertex of maximum remaining degree (ties to the lowest index) and prunes
with a greedy clique-cover upper bound.  Disjoint components are solved
independently and merged.  ``brute_force_alpha`` is a deliberately separate
subset-enumeration oracle used to cross-validate the solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphTooLargeError
from .graph import Graph, complement, connected_components, induced_subgraph

INDEPENDENT_SET = "independent-set"
CLIQUE = "clique"

DEFAULT_SOLVER_CAP = 64
DEFAULT_BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class WitnessCertificate:
    """Vertex set claimed independent (or complete), with its size."""

    vertices: frozenset[int]
    kind: str

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


def validate_certificate(g: Graph, certificate: WitnessCertificate) -> bool:
    """Independent check that a certificate is what it claims on ``g``."""
    members = sorted(certificate.vertices)
    if members and not (0 <= members[0] and members[-1] < g.n):
        return False
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            adjacent = v in g.adjacency[u]
            if certificate.kind == INDEPENDENT_SET and adjacent:
                return False
            if certificate.kind == CLIQUE and not adjacent:
                return False
    return True


def _clique_cover_bound(cand: int, masks: tuple[int, ...]) -> int:
    """Number of cliques in a greedy cover of the candidate set; an upper
    bound for the independence number of the induced subgraph."""
    cliques: list[int] = []
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        mv = masks[v]
        for i, members in enumerate(cliques):
            if members & ~mv == 0:
                cliques[i] = members | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def _greedy_independent(cand: int, masks: tuple[int, ...]) -> int:
    chosen = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        chosen |= low
        rest &= ~(masks[v] | low)
    return chosen


def _mis_component(n: int, masks: tuple[int, ...]) -> int:
    """Maximum independent set of a graph given as bitmasks; returns the set
    as a bitmask.  Deterministic: first optimum found, improved only by size
    or (on equal size at a completed leaf) by lexicographic vertex order."""
    full = (1 << n) - 1
    seed = _greedy_independent(full, masks)
    best_mask = seed
    best_size = seed.bit_count()

    def mask_key(mask: int) -> tuple[int, ...]:
        return tuple(v for v in range(n) if (mask >> v) & 1)

    def solve(cand: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_mask, best_size
        if cand == 0:
            if cur_size > best_size or (
                cur_size == best_size and mask_key(cur_mask) < mask_key(best_mask)
            ):
                best_mask, best_size = cur_mask, cur_size
            return
        if cur_size + cand.bit_count() <= best_size:
            return
        if cur_size + _clique_cover_bound(cand, masks) <= best_size:
            return
        # Branch vertex: maximum degree inside the candidate set, lowest index.
        branch = -1
        branch_deg = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            dv = (masks[v] & cand).bit_count()
            if dv > branch_deg:
                branch, branch_deg = v, dv
        bit = 1 << branch
        solve(cand & ~(masks[branch] | bit), cur_mask | bit, cur_size + 1)
        solve(cand & ~bit, cur_mask, cur_size)

    solve(full, 0, 0)
    return best_mask


def max_independent_set(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> WitnessCertificate:
    """Maximum independent set of ``g`` as a validated certificate."""
    if g.n > cap:
        raise GraphTooLargeError(f"graph has {g.n} vertices, solver cap is {cap}")
    chosen: set[int] = set()
    for comp in connected_components(g):
        original = sorted(comp)
        sub = induced_subgraph(g, original)
        local = _mis_component(sub.n, sub.adjacency_masks())
        chosen.update(original[v] for v in range(sub.n) if (local >> v) & 1)
    return WitnessCertificate(frozenset(chosen), INDEPENDENT_SET)


def max_clique(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> WitnessCertificate:
    """Maximum clique, solved as an independent set of the complement."""
    cert = max_independent_set(complement(g), cap=cap)
    return WitnessCertificate(cert.vertices, CLIQUE)


def brute_force_alpha(g: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> int:
    """Independence number by checking all 2^n subsets (oracle; n <= cap)."""
    n = g.n
    if n > cap:
        raise GraphTooLargeError(f"graph has {g.n} vertices, brute-force cap is {cap}")
    masks = g.adjacency_masks()
    independent = bytearray(1 << n)
    independent[0] = 1
    best = 0
    for subset in range(1, 1 << n):
        low = subset & -subset
        v = low.bit_length() - 1
        rest = subset ^ low
        if independent[rest] and not (masks[v] & rest):
            independent[subset] = 1
            size = subset.bit_count()
            if size > best:
                best = size
    return best
