"""Canonical labeling, isomorphism testing, and induced-pattern search.

The canonical key of a graph is the lexicographically smallest upper-triangle
bit string of its adjacency matrix, read column by column, minimized over all
vertex orderings that respect the degree partition (iteratively refined by
neighbor-degree signatures).  The search backtracks with prefix pruning and
explores only one representative per class of interchangeable (twin)
vertices, which keeps highly symmetric graphs cheap.

Intended for small graphs; hard cap of 12 vertices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import GraphTooLargeError
from .graph import Graph, induced_subgraph

MAX_CANONICAL_VERTICES = 12
MAX_PATTERN_VERTICES = 6


def _ranks_by_descending_value(values: tuple[int, ...]) -> tuple[int, ...]:
    """Rank 0 for the largest value, 1 for the next, ..., per vertex."""
    order = sorted(set(values), reverse=True)
    index = {val: i for i, val in enumerate(order)}
    return tuple(index[v] for v in values)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine_ranks(
    n: int, masks: tuple[int, ...], ranks: tuple[int, ...]
) -> tuple[int, ...]:
    """Iterated neighbor-rank refinement; stable and isomorphism-invariant."""
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(ranks[u] for u in _iter_bits(masks[v]))
            sigs.append((ranks[v], tuple(neigh)))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = tuple(order[sig] for sig in sigs)
        if new == ranks:
            return ranks
        ranks = new


def _twin_classes(n: int, masks: tuple[int, ...]) -> list[int]:
    """Class id per vertex; two vertices share a class when swapping them is a
    graph automorphism (equal open or closed neighborhoods, transitively)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for v in range(n):
        key = masks[v]
        if key in open_groups:
            union(open_groups[key], v)
        else:
            open_groups[key] = v
        ckey = masks[v] | (1 << v)
        if ckey in closed_groups:
            union(closed_groups[ckey], v)
        else:
            closed_groups[ckey] = v
    return [find(v) for v in range(n)]


class _Abort(Exception):
    pass


def _search_min_segments(
    n: int,
    masks: tuple[int, ...],
    ranks: tuple[int, ...],
    incumbent: list[int] | None = None,
    abort_on_smaller: bool = False,
) -> tuple[list[int], bool]:
    """Minimize the column segments of the adjacency code over rank-respecting
    orderings.

    Returns (best_segments, found_smaller_than_incumbent).  With
    ``abort_on_smaller`` the search stops at the first ordering that beats the
    incumbent, which makes canonicity rejection cheap.
    """
    rank_seq = sorted(ranks)
    twin = _twin_classes(n, masks)
    best: list[int] | None = list(incumbent) if incumbent is not None else None
    version = 0
    placed: list[int] = []
    segs: list[int] = []
    used = 0

    def dfs(depth: int, rel_eq: bool, ver: int) -> None:
        nonlocal best, version, used
        if depth == n:
            if best is None:
                best = segs.copy()
                version += 1
            elif not rel_eq:
                best = segs.copy()
                version += 1
                if abort_on_smaller:
                    raise _Abort
            return
        required = rank_seq[depth]
        cands: list[tuple[int, int]] = []
        seen_twins: set[int] = set()
        for v in range(n):
            if used & (1 << v) or ranks[v] != required:
                continue
            cls = twin[v]
            if cls in seen_twins:
                continue
            seen_twins.add(cls)
            mv = masks[v]
            seg = 0
            for u in placed:
                seg = (seg << 1) | ((mv >> u) & 1)
            cands.append((seg, v))
        cands.sort()
        for seg, v in cands:
            if best is not None:
                if ver != version:
                    # Any update since we entered came from our own subtree,
                    # so the new best shares this node's prefix.
                    rel_eq = True
                    ver = version
                if rel_eq:
                    ref = best[depth]
                    if seg > ref:
                        break  # candidates sorted ascending
                    child_eq = seg == ref
                else:
                    child_eq = False
            else:
                child_eq = True
            placed.append(v)
            segs.append(seg)
            used |= 1 << v
            dfs(depth + 1, child_eq, version)
            placed.pop()
            segs.pop()
            used &= ~(1 << v)

    found_smaller = False
    try:
        dfs(0, True, version if best is not None else 0)
    except _Abort:
        found_smaller = True
    assert best is not None
    return best, found_smaller


def compose_code(segments: list[int]) -> int:
    """Pack per-position column segments into one integer code."""
    code = 0
    for width, seg in enumerate(segments):
        code = (code << width) | seg
    return code


def labeling_segments(n: int, masks: tuple[int, ...]) -> list[int]:
    """Column segments of the graph under its own labeling."""
    segs = []
    for v in range(n):
        seg = 0
        for u in range(v):
            seg = (seg << 1) | ((masks[v] >> u) & 1)
        segs.append(seg)
    return segs


def min_code_segments(
    n: int, masks: tuple[int, ...], ranks: tuple[int, ...]
) -> list[int]:
    best, _ = _search_min_segments(n, masks, ranks)
    return best


def labeling_is_canonical(
    n: int, masks: tuple[int, ...], ranks: tuple[int, ...], own: list[int]
) -> bool:
    """True iff ``own`` (the graph's current labeling) attains the minimum code
    over rank-respecting orderings."""
    _, smaller = _search_min_segments(
        n, masks, ranks, incumbent=own, abort_on_smaller=True
    )
    return not smaller


@lru_cache(maxsize=8192)
def _canonical_key_cached(g: Graph, colors: tuple[int, ...] | None) -> tuple[int, int]:
    n = g.n
    masks = g.adjacency_masks()
    base = colors if colors is not None else g.degrees()
    ranks = _ranks_by_descending_value(base)
    ranks = _refine_ranks(n, masks, ranks)
    return n, compose_code(min_code_segments(n, masks, ranks))


def canonical_key(g: Graph, colors: tuple[int, ...] | None = None) -> tuple[int, int]:
    """Canonical form of ``g`` as ``(n, code)``; equal keys iff isomorphic.

    With ``colors`` the key canonicalizes over color-preserving orderings
    only (colors compare by value), so keys are comparable within one color
    convention.
    """
    if g.n > MAX_CANONICAL_VERTICES:
        raise GraphTooLargeError(
            f"canonical labeling supports at most {MAX_CANONICAL_VERTICES} vertices"
        )
    if colors is not None:
        colors = tuple(colors)
        if len(colors) != g.n:
            raise ValueError("need one color per vertex")
    return _canonical_key_cached(g, colors)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs with at most 12 vertices."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of ``pattern``.

    Exhaustive over subsets; ``pattern`` is capped at 6 vertices.
    """
    p = pattern.n
    if p > MAX_PATTERN_VERTICES:
        raise GraphTooLargeError(
            f"pattern is limited to {MAX_PATTERN_VERTICES} vertices"
        )
    if p > g.n:
        return False
    if p == 0:
        return True
    pattern_key = canonical_key(pattern)
    pattern_degrees = sorted(pattern.degrees())
    for subset in combinations(range(g.n), p):
        sub = induced_subgraph(g, subset)
        if sub.m != pattern.m:
            continue
        if sorted(sub.degrees()) != pattern_degrees:
            continue
        if canonical_key(sub) == pattern_key:
            return True
    return False
