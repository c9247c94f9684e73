"""Constructive independent-set witnesses for non-canonical members of the
clique-union degree-equivalence family (dually, clique witnesses in the
complete-multipartite family).

For a graph degree-equivalent to a union of k cliques that is not that clique
union itself, the construction returns an independent set of size at least
k + 1 in polynomial time:

1. Strip every connected component that is itself a clique; each removal
   shrinks the part profile by one and contributes one vertex to the final
   set.  A non-canonical input leaves a non-empty remainder with no clique
   components.
2. Partition the remainder into layers by degree: the layer for part size a
   holds a vertices of degree a - 1; equal sizes are split into index-sorted
   chunks.  Write a_1 = ... = a_c < a_{c+1} <= ... for the c minimum parts.
3. Core step: inside the subgraph induced by the c minimum layers, any
   maximal independent set has at least c vertices (each chosen vertex
   dominates at most a_1 vertices of the c * a_1 total).  If greedy gives
   exactly c, the counting forces the chosen neighborhoods to be pairwise
   disjoint and to cover everything else; some chosen vertex then has two
   non-adjacent neighbors (otherwise the remainder would contain a clique
   component), and swapping it for that pair yields c + 1 vertices.
4. Extension step: layers are added one at a time.  All current members have
   degree at most one less than their layer's part size, so they cannot
   dominate the strictly larger next layer; an index-ascending scan finds a
   vertex non-adjacent to all members.

Each step is deterministic, so certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import CanonicalGraphError, OutsideFamilyError, ProofStateError
from .exact import CLIQUE, INDEPENDENT_SET, WitnessCertificate
from .graph import Graph, complement, connected_components, degree_sequence, induced_subgraph
from .instrument import OpCounter
from .recognition import clique_union_profile_from_degrees, is_clique_union
from .sequences import CLIQUE_SIZES, PartitionProfile


@dataclass(frozen=True)
class ProofState:
    """Working state of the constructive search on the stripped graph."""

    graph: Graph
    profile: PartitionProfile
    min_part_count: int
    layers: tuple[tuple[int, ...], ...]
    independent: tuple[int, ...]
    level: int

    @property
    def active_vertices(self) -> frozenset[int]:
        """Vertices of the layers currently in play."""
        count = self.min_part_count + self.level
        return frozenset(v for layer in self.layers[:count] for v in layer)


def strip_clique_components(
    g: Graph, profile: PartitionProfile
) -> tuple[Graph, PartitionProfile]:
    """Remove every connected component that is a complete graph; drop one
    matching part per removal.  The remainder is degree-equivalent to the
    reduced profile and has no clique components."""
    remainder, reduced, _, _ = _strip_with_maps(g, profile)
    return remainder, reduced


def _strip_with_maps(
    g: Graph, profile: PartitionProfile, counter: OpCounter | None = None
) -> tuple[Graph, PartitionProfile, list[int], list[frozenset[int]]]:
    parts = list(profile.parts)
    kept: list[int] = []
    removed: list[frozenset[int]] = []
    for comp in connected_components(g):
        q = len(comp)
        if counter is not None:
            counter.bump(q)
        if all(len(g.adjacency[v]) == q - 1 for v in comp):
            if q not in parts:
                raise ProofStateError(
                    f"clique component of size {q} has no matching part in {parts}"
                )
            parts.remove(q)
            removed.append(comp)
        else:
            kept.extend(comp)
    kept.sort()
    remainder = induced_subgraph(g, kept)
    return remainder, PartitionProfile(tuple(parts), CLIQUE_SIZES), kept, removed


def _build_layers(
    g: Graph, profile: PartitionProfile
) -> tuple[tuple[int, ...], ...]:
    """Split the vertices into layers matching the sorted part sizes: the
    layer for size a takes a vertices of degree a - 1, in index order."""
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(len(g.adjacency[v]), []).append(v)
    layers: list[tuple[int, ...]] = []
    cursor: dict[int, int] = {}
    for a in profile.parts:
        bucket = by_degree.get(a - 1, [])
        start = cursor.get(a, 0)
        chunk = bucket[start : start + a]
        if len(chunk) != a:
            raise ProofStateError(
                f"degree class {a - 1} too small for part of size {a}"
            )
        cursor[a] = start + a
        layers.append(tuple(chunk))
    return tuple(layers)


def initial_proof_state(g: Graph, profile: PartitionProfile) -> ProofState:
    """State for a stripped graph: layers assigned, no vertices chosen yet."""
    parts = profile.parts
    if not parts:
        raise ProofStateError("empty profile; graph was fully stripped")
    c = parts.count(parts[0])
    return ProofState(
        graph=g,
        profile=profile,
        min_part_count=c,
        layers=_build_layers(g, profile),
        independent=(),
        level=0,
    )


def _greedy_independent(
    g: Graph, vertices: list[int], counter: OpCounter | None = None
) -> list[int]:
    chosen: list[int] = []
    for v in vertices:
        if counter is not None:
            counter.bump(len(chosen))
        if all(u not in g.adjacency[v] for u in chosen):
            chosen.append(v)
    return chosen


def base_independent_set(
    state: ProofState, counter: OpCounter | None = None
) -> frozenset[int]:
    """Independent set of size at least c + 1 inside the c minimum layers.

    Greedy (ascending index) gives a maximal independent set of size >= c; if
    it has exactly c members, one of them must have two non-adjacent
    neighbors, and the swap repair replaces it by that pair.
    """
    g = state.graph
    c = state.min_part_count
    core = sorted(v for layer in state.layers[:c] for v in layer)
    core_set = set(core)
    greedy = _greedy_independent(g, core, counter)
    if len(greedy) < c:
        raise ProofStateError(
            "maximal independent set smaller than the minimum-part count"
        )
    if len(greedy) >= c + 1:
        return frozenset(greedy)
    for x in greedy:
        neighborhood = sorted(g.adjacency[x] & core_set)
        for i, y in enumerate(neighborhood):
            for z in neighborhood[i + 1 :]:
                if counter is not None:
                    counter.bump()
                if z not in g.adjacency[y]:
                    result = set(greedy)
                    result.discard(x)
                    result.update((y, z))
                    return frozenset(result)
    raise ProofStateError(
        "all chosen neighborhoods are cliques; the stripped graph would "
        "contain a clique component"
    )


def extend_independent_set(
    state: ProofState, counter: OpCounter | None = None
) -> ProofState:
    """Bring the next layer into play and grow the independent set by one
    vertex non-adjacent to all current members."""
    g = state.graph
    c = state.min_part_count
    k = state.profile.k
    if state.level >= k - c:
        raise ProofStateError("no further layers to extend into")
    count = c + state.level + 1
    members = set(state.independent)
    candidates = sorted(
        v for layer in state.layers[:count] for v in layer if v not in members
    )
    for v in candidates:
        if counter is not None:
            counter.bump(len(members))
        if not (g.adjacency[v] & members):
            return replace(
                state,
                independent=tuple(sorted(members | {v})),
                level=state.level + 1,
            )
    raise ProofStateError(
        "extension scan found no vertex; degree bookkeeping violated"
    )


def witness_independent_set(
    g: Graph, counter: OpCounter | None = None
) -> WitnessCertificate:
    """Independent set of size >= k + 1 for a non-canonical graph that is
    degree-equivalent to a union of k cliques.

    Raises OutsideFamilyError when the degree sequence does not match any
    clique union, CanonicalGraphError when the graph is the clique union
    itself (its independence number is exactly k).
    """
    profile = clique_union_profile_from_degrees(degree_sequence(g))
    if profile is None:
        raise OutsideFamilyError(
            "degree sequence does not match any disjoint clique union"
        )
    if is_clique_union(g) is not None:
        raise CanonicalGraphError(
            "graph is the canonical clique union; no larger independent set exists"
        )
    remainder, reduced, kept, removed = _strip_with_maps(g, profile, counter)
    state = initial_proof_state(remainder, reduced)
    base = base_independent_set(state, counter)
    k_reduced = reduced.k
    # A base set larger than c + 1 has all members in the minimum layers and
    # fast-forwards the layer induction by its surplus.
    level = min(len(base) - state.min_part_count - 1, k_reduced - state.min_part_count)
    state = replace(state, independent=tuple(sorted(base)), level=level)
    while len(state.independent) < k_reduced + 1:
        state = extend_independent_set(state, counter)
    chosen = {kept[v] for v in state.independent}
    chosen.update(min(comp) for comp in removed)
    certificate = WitnessCertificate(frozenset(chosen), INDEPENDENT_SET)
    if certificate.size < profile.k + 1:
        raise ProofStateError("constructed witness smaller than required")
    return certificate


def witness_clique(g: Graph, counter: OpCounter | None = None) -> WitnessCertificate:
    """Clique of size >= k + 1 for a non-canonical graph degree-equivalent to
    a complete k-partite graph; runs the independent-set construction on the
    complement."""
    cert = witness_independent_set(complement(g), counter)
    return WitnessCertificate(cert.vertices, CLIQUE)
