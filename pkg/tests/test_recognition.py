from itertools import combinations

from kpartite import (
    OpCounter,
    clique_union,
    clique_union_profile_from_degrees,
    complement,
    complete_multipartite,
    connected_components,
    cycle_graph,
    degree_sequence,
    empty_graph,
    is_clique_union,
    is_complete_multipartite,
    multipartite_profile_from_degrees,
    path_graph,
)


def brute_force_is_multipartite(g):
    """Definitional check: the parts must be the components of the complement,
    with every cross-part pair adjacent and every intra-part pair not."""
    parts = connected_components(complement(g))
    for part in parts:
        for u, v in combinations(sorted(part), 2):
            if v in g.adjacency[u]:
                return None
    for i, p1 in enumerate(parts):
        for p2 in parts[i + 1 :]:
            for u in p1:
                for v in p2:
                    if v not in g.adjacency[u]:
                        return None
    return tuple(sorted(len(p) for p in parts))


def brute_force_is_clique_union(g):
    comps = connected_components(g)
    for comp in comps:
        for u, v in combinations(sorted(comp), 2):
            if v not in g.adjacency[u]:
                return None
    return tuple(sorted(len(c) for c in comps))


def test_examples():
    assert is_complete_multipartite(cycle_graph(4)).parts == (2, 2)
    assert is_complete_multipartite(path_graph(4)) is None
    assert is_complete_multipartite(complete_multipartite([3, 3, 4])).parts == (3, 3, 4)
    assert is_clique_union(clique_union([3, 3, 4])).parts == (3, 3, 4)
    assert is_clique_union(cycle_graph(6)) is None
    assert is_clique_union(empty_graph(3)).parts == (1, 1, 1)


def test_empty_graph_gives_empty_profiles():
    g = empty_graph(0)
    assert is_complete_multipartite(g).parts == ()
    assert is_clique_union(g).parts == ()


def test_exhaustive_agreement_small(small_graph_corpus):
    for g in small_graph_corpus:
        expected_mp = brute_force_is_multipartite(g)
        got_mp = is_complete_multipartite(g)
        assert (got_mp.parts if got_mp else None) == expected_mp

        expected_cu = brute_force_is_clique_union(g)
        got_cu = is_clique_union(g)
        assert (got_cu.parts if got_cu else None) == expected_cu


def test_exhaustive_duality_small(small_graph_corpus):
    for g in small_graph_corpus:
        assert (is_complete_multipartite(g) is not None) == (
            is_clique_union(complement(g)) is not None
        )


def test_degree_conditions_match_realizations(small_graph_corpus):
    """A degree sequence admits a clique-union profile iff some graph with
    that degree sequence is a clique union (and dually), checked across every
    sequence realized by a small graph."""
    clique_union_sequences = set()
    multipartite_sequences = set()
    all_sequences = set()
    for g in small_graph_corpus:
        ds = degree_sequence(g)
        all_sequences.add(ds)
        if is_clique_union(g) is not None:
            clique_union_sequences.add(ds)
        if is_complete_multipartite(g) is not None:
            multipartite_sequences.add(ds)
    for ds in all_sequences:
        assert (clique_union_profile_from_degrees(ds) is not None) == (
            ds in clique_union_sequences
        )
        assert (multipartite_profile_from_degrees(ds) is not None) == (
            ds in multipartite_sequences
        )


def test_probe_counts_stay_linear():
    n = 600
    cu = clique_union([3] * (n // 3))
    counter = OpCounter()
    assert is_clique_union(cu, counter=counter) is not None
    assert counter.count <= 4 * (cu.n + cu.m)

    mp = complete_multipartite([2, n - 2])
    counter = OpCounter()
    assert is_complete_multipartite(mp, counter=counter) is not None
    assert counter.count <= 4 * (mp.n + mp.m)


def test_from_degrees_touch_only_multiplicities():
    ds = degree_sequence(clique_union([3] * 50 + [7] * 20))
    counter = OpCounter()
    clique_union_profile_from_degrees(ds, counter=counter)
    assert counter.count == len(ds.multiplicities)
