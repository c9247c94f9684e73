"""Degree-sequence realizations: one witness graph, exhaustive enumeration up
to isomorphism, seeded 2-switch sampling, and the four-copies reduction.

Enumeration builds graphs one vertex at a time in non-increasing target-degree
order, deciding each new vertex's back-edges as a column of the adjacency
triangle.  A partial graph survives only if its labeling attains the minimum
column code over all orderings that respect the target degrees; the prefix of
a minimal labeling is itself minimal, so every isomorphism class is emitted
exactly once without storing previously seen graphs.  Degree feasibility of
every partial graph is checked with residual-capacity and Erdos-Gallai
pruning.

The 2-switch sampler draws from numpy's PCG64 generator, so walks are
reproducible from the seed across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import GraphTooLargeError, NonGraphicalError
from .graph import Graph, disjoint_union
from .isomorphism import (
    _ranks_by_descending_value,
    compose_code,
    labeling_is_canonical,
)
from .sequences import DegreeSequence, _erdos_gallai_sorted, is_graphical

ENUMERATION_CAP = 10


def havel_hakimi_realize(degrees: DegreeSequence) -> Graph:
    """One realization of a graphical degree sequence.

    Vertex i receives the i-th largest degree; each round links the vertex of
    largest remaining degree (lowest index on ties) to the next-largest ones.
    """
    if not is_graphical(degrees):
        raise NonGraphicalError(f"{degrees!r} is not graphical")
    n = degrees.n
    remaining = list(degrees.sorted(descending=True))
    edges: list[tuple[int, int]] = []
    active = list(range(n))
    while True:
        active = [v for v in active if remaining[v] > 0]
        if not active:
            break
        active.sort(key=lambda v: (-remaining[v], v))
        v = active[0]
        need = remaining[v]
        if need > len(active) - 1:
            raise AssertionError("graphical sequence exhausted neighbors")
        for u in active[1 : need + 1]:
            edges.append((v, u))
            remaining[u] -= 1
        remaining[v] = 0
    return Graph(n, edges)


class RealizationStream:
    """Iterator over all realizations of a degree sequence, one per
    isomorphism class, in a fixed deterministic order.

    ``emitted_codes`` keeps the canonical code of every graph produced so far
    and is used to assert that no class is emitted twice.
    """

    def __init__(self, target: DegreeSequence) -> None:
        self.target = target
        self.emitted_codes: set[int] = set()
        self._iterator = _enumerate_graphs(target)

    def __iter__(self) -> "RealizationStream":
        return self

    def __next__(self) -> Graph:
        graph, code = next(self._iterator)
        if code in self.emitted_codes:
            raise AssertionError("enumeration emitted two isomorphic graphs")
        self.emitted_codes.add(code)
        return graph


def enumerate_realizations(
    degrees: DegreeSequence, cap: int = ENUMERATION_CAP
) -> RealizationStream:
    """Stream every simple graph with the given degree sequence, exactly one
    representative per isomorphism class."""
    if degrees.n > cap:
        raise GraphTooLargeError(
            f"enumeration supports at most {cap} vertices, got {degrees.n}"
        )
    if not is_graphical(degrees):
        raise NonGraphicalError(f"{degrees!r} is not graphical")
    return RealizationStream(degrees)


def _enumerate_graphs(degrees: DegreeSequence):
    n = degrees.n
    targets = degrees.sorted(descending=True)
    if n == 0:
        yield Graph(0), 0
        return
    ranks = _ranks_by_descending_value(targets)

    masks = [0] * n
    residual = [0] * n
    segs: list[int] = [0]
    residual[0] = targets[0]
    # The shared masks/residual/segs state is mutated depth-first; the stream
    # must be consumed from a single thread.

    def feasible(placed: int) -> bool:
        future = n - placed
        total_placed = 0
        for v in range(placed):
            r = residual[v]
            if r > future:
                return False
            total_placed += r
        future_targets = targets[placed:]
        if (total_placed + sum(future_targets)) % 2 != 0:
            return False
        supply = sum(min(t, placed) for t in future_targets)
        if total_placed > supply:
            return False
        combined = sorted(residual[:placed] + list(future_targets), reverse=True)
        return _erdos_gallai_sorted(tuple(combined))

    def extend(r: int):
        # vertices 0..r-1 placed; place vertex r.
        if r == n:
            if all(residual[v] == 0 for v in range(n)):
                final = Graph(n, _mask_edges(n, masks))
                yield final, compose_code(segs)
            return
        t = targets[r]
        future = n - r - 1
        eligible = [u for u in range(r) if residual[u] > 0]
        low = max(0, t - future)
        high = min(t, len(eligible))
        prev_seg = segs[-1] if r >= 1 else 0
        same_rank = r >= 1 and ranks[r] == ranks[r - 1]
        for size in range(low, high + 1):
            for chosen in combinations(eligible, size):
                seg = 0
                for u in range(r):
                    seg = (seg << 1) | (1 if u in chosen else 0)
                # A minimal labeling has non-decreasing columns within one
                # target-degree block (restricted to shared positions).
                if same_rank and (seg >> 1) < prev_seg:
                    continue
                for u in chosen:
                    residual[u] -= 1
                    masks[u] |= 1 << r
                    masks[r] |= 1 << u
                residual[r] = t - size
                segs.append(seg)
                if feasible(r + 1) and labeling_is_canonical(
                    r + 1, tuple(masks[: r + 1]), ranks[: r + 1], segs
                ):
                    yield from extend(r + 1)
                segs.pop()
                residual[r] = 0
                for u in chosen:
                    residual[u] += 1
                    masks[u] &= ~(1 << r)
                    masks[r] &= ~(1 << u)

    # The one-vertex prefix is trivially canonical; start the search there.
    if feasible(1):
        yield from extend(1)


def _mask_edges(n: int, masks: list[int]) -> list[tuple[int, int]]:
    edges = []
    for u in range(n):
        mu = masks[u] >> (u + 1)
        v = u + 1
        while mu:
            if mu & 1:
                edges.append((u, v))
            mu >>= 1
            v += 1
    return edges


@dataclass(frozen=True)
class SwitchStep:
    """One degree-preserving edge swap: remove two disjoint edges, add one of
    the two possible rewirings of their four endpoints."""

    removed: tuple[tuple[int, int], tuple[int, int]]
    added: tuple[tuple[int, int], tuple[int, int]]


def two_switch(g: Graph, step: SwitchStep) -> Graph:
    """Apply a validated 2-switch; raises ValueError on an invalid step."""
    (a, b), (c, d) = step.removed
    endpoints = {a, b, c, d}
    if len(endpoints) != 4:
        raise ValueError("2-switch needs four distinct vertices")
    added_endpoints = {v for e in step.added for v in e}
    if added_endpoints != endpoints:
        raise ValueError("added edges must rewire the removed endpoints")
    for u, v in step.removed:
        if not g.has_edge(u, v):
            raise ValueError(f"removed edge ({u}, {v}) not present")
    for u, v in step.added:
        if u == v:
            raise ValueError("2-switch would create a loop")
        if g.has_edge(u, v):
            raise ValueError(f"added edge ({u}, {v}) already present")
    removed = {frozenset(e) for e in step.removed}
    added = {frozenset(e) for e in step.added}
    if removed & added:
        raise ValueError("added edges must differ from removed edges")
    edges = [e for e in g.edges() if frozenset(e) not in removed]
    edges.extend(tuple(sorted(e)) for e in step.added)
    return Graph(g.n, edges)


def inverse_step(step: SwitchStep) -> SwitchStep:
    return SwitchStep(removed=step.added, added=step.removed)


def random_switch_walk(g: Graph, steps: int, seed: int) -> Graph:
    """Walk ``steps`` proposed 2-switches from ``g``; proposals that would
    create loops or duplicate edges are rejected but still consume a step.

    Deterministic: proposals are drawn from numpy's PCG64 stream for ``seed``.
    Every visited graph has the degree sequence of ``g``.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    edges = [tuple(e) for e in g.edges()]
    adjacency = [set(neigh) for neigh in g.adjacency]
    m = len(edges)
    for _ in range(steps):
        if m < 2:
            break
        i = int(rng.integers(0, m))
        j = int(rng.integers(0, m - 1))
        if j >= i:
            j += 1
        a, b = edges[i]
        c, d = edges[j]
        if len({a, b, c, d}) != 4:
            continue
        if rng.integers(0, 2) == 0:
            new1, new2 = (a, c), (b, d)
        else:
            new1, new2 = (a, d), (b, c)
        if new1[1] in adjacency[new1[0]] or new2[1] in adjacency[new2[0]]:
            continue
        adjacency[a].discard(b)
        adjacency[b].discard(a)
        adjacency[c].discard(d)
        adjacency[d].discard(c)
        for u, v in (new1, new2):
            adjacency[u].add(v)
            adjacency[v].add(u)
        edges[i] = tuple(sorted(new1))
        edges[j] = tuple(sorted(new2))
    return Graph(g.n, edges)


def four_copies(g: Graph) -> Graph:
    """Disjoint union of four copies of a cubic graph; the result is
    degree-equivalent to a union of 4-cliques and has four times the
    independence number of ``g``."""
    if any(d != 3 for d in g.degrees()):
        raise ValueError("four_copies requires a cubic (3-regular) graph")
    return disjoint_union([g, g, g, g])
