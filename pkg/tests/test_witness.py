import numpy as np
import pytest

from kpartite import (
    CanonicalGraphError,
    Graph,
    OpCounter,
    OutsideFamilyError,
    PartitionProfile,
    ProofStateError,
    base_independent_set,
    clique_union,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_realizations,
    extend_independent_set,
    initial_proof_state,
    is_clique_union,
    max_independent_set,
    path_graph,
    random_switch_walk,
    strip_clique_components,
    validate_certificate,
    witness_clique,
    witness_independent_set,
)
from kpartite.sequences import CLIQUE_SIZES


def test_witness_on_c6():
    cert = witness_independent_set(cycle_graph(6))
    assert cert.sorted_vertices() == (0, 2, 4)
    assert validate_certificate(cycle_graph(6), cert)


def test_witness_on_p5():
    cert = witness_independent_set(path_graph(5))
    assert cert.sorted_vertices() == (0, 2, 4)


def test_witness_rejects_canonical_and_foreign_graphs():
    with pytest.raises(CanonicalGraphError):
        witness_independent_set(clique_union([3, 3, 4]))
    with pytest.raises(OutsideFamilyError):
        witness_independent_set(path_graph(4))


def test_witness_swap_repair_branch():
    # a relabeling of C6 whose greedy core set has exactly the minimum size,
    # forcing the swap of one chosen vertex for two of its neighbors
    g = Graph(6, [(0, 1), (0, 2), (3, 4), (3, 5), (1, 4), (2, 5)])
    cert = witness_independent_set(g)
    assert validate_certificate(g, cert)
    assert cert.size >= 3


def test_witness_strips_clique_components():
    g = disjoint_union([complete_graph(2), path_graph(5)])
    cert = witness_independent_set(g)
    assert validate_certificate(g, cert)
    assert cert.size >= 4  # k = 3 parts (2, 2, 3)

    g = disjoint_union([path_graph(5), complete_graph(3)])
    cert = witness_independent_set(g)
    assert validate_certificate(g, cert)
    assert cert.size >= 4


def test_witness_with_small_clique_components_inside_core():
    # P3 u P4 realizes the degrees of K2 u K2 u K3; its min layers hold the
    # four leaves, and the stripped graph has no clique components even
    # though the core induces isolated vertices.
    g = disjoint_union([path_graph(3), path_graph(4)])
    cert = witness_independent_set(g)
    assert validate_certificate(g, cert)
    assert cert.size >= 4


def test_strip_examples():
    g = disjoint_union([path_graph(5), complete_graph(3)])
    remainder, reduced = strip_clique_components(g, PartitionProfile((2, 3, 3)))
    assert remainder.n == 5 and reduced.parts == (2, 3)

    g = clique_union([3, 3])
    remainder, reduced = strip_clique_components(g, PartitionProfile((3, 3)))
    assert remainder.n == 0 and reduced.parts == ()

    c6 = cycle_graph(6)
    remainder, reduced = strip_clique_components(c6, PartitionProfile((3, 3)))
    assert remainder == c6 and reduced.parts == (3, 3)


def test_base_independent_set_on_c6():
    state = initial_proof_state(cycle_graph(6), PartitionProfile((3, 3)))
    base = base_independent_set(state)
    assert base == frozenset({0, 2, 4})


def test_base_independent_set_on_c9():
    state = initial_proof_state(cycle_graph(9), PartitionProfile((3, 3, 3)))
    base = base_independent_set(state)
    assert base == frozenset({0, 2, 4, 6})


def test_extension_on_p5():
    from dataclasses import replace

    g = path_graph(5)
    state = initial_proof_state(g, PartitionProfile((2, 3)))
    base = base_independent_set(state)
    assert base == frozenset({0, 4})
    state = replace(state, independent=tuple(sorted(base)), level=0)
    state = extend_independent_set(state)
    assert set(state.independent) == {0, 2, 4}
    with pytest.raises(ProofStateError):
        extend_independent_set(state)


def test_initial_proof_state_rejects_empty_profile():
    with pytest.raises(ProofStateError):
        initial_proof_state(Graph(0), PartitionProfile((), CLIQUE_SIZES))


def test_witness_clique_duals():
    cert = witness_clique(complement(cycle_graph(6)))
    assert cert.size == 3
    assert validate_certificate(complement(cycle_graph(6)), cert)

    cert = witness_clique(complement(path_graph(5)))
    assert cert.size == 3

    from kpartite import complete_multipartite

    with pytest.raises(CanonicalGraphError):
        witness_clique(complete_multipartite([3, 3, 4]))


def test_witness_sound_on_every_noncanonical_realization_up_to_8():
    from kpartite import iter_profiles

    for profile in iter_profiles(8):
        k = profile.k
        for g in enumerate_realizations(profile.degree_sequence()):
            if is_clique_union(g) is not None:
                with pytest.raises(CanonicalGraphError):
                    witness_independent_set(g)
                continue
            cert = witness_independent_set(g)
            assert validate_certificate(g, cert)
            assert cert.size >= k + 1
            assert cert.size <= max_independent_set(g).size


def test_witness_on_large_random_family_members():
    rng = np.random.Generator(np.random.PCG64(17))
    for n in [60, 120, 200]:
        parts = []
        left = n
        while left > 0:
            a = int(rng.integers(2, min(left, 9) + 1)) if left > 1 else 1
            parts.append(a)
            left -= a
        profile = PartitionProfile(tuple(parts))
        canonical = clique_union(profile.parts)
        g = random_switch_walk(canonical, steps=4 * canonical.m, seed=n)
        if is_clique_union(g) is not None:
            continue
        counter = OpCounter()
        cert = witness_independent_set(g, counter=counter)
        assert validate_certificate(g, cert)
        assert cert.size >= profile.k + 1
        assert counter.count <= n**3
