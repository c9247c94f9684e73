#!/usr/bin/env python3
"""Recognizing clique unions and complete multipartite graphs.

Both families can be identified from a graph in linear time, and membership
of the whole degree-equivalence class can be read off the degree multiset
alone: a sequence belongs to a clique union exactly when the multiplicity of
each degree d is a multiple of d + 1, and to a complete multipartite graph
exactly when the multiplicity of each degree d is a multiple of n - d.
"""

from kpartite import (
    DegreeSequence,
    clique_union,
    clique_union_profile_from_degrees,
    complement,
    complete_multipartite,
    cycle_graph,
    degree_sequence,
    is_clique_union,
    is_complete_multipartite,
    is_graphical,
    multipartite_profile_from_degrees,
    path_graph,
)

print("=== Recognizing graphs directly ===")
examples = {
    "C4": cycle_graph(4),
    "P4": path_graph(4),
    "K_{3,3,4}": complete_multipartite([3, 3, 4]),
    "K3 u K3 u K4": clique_union([3, 3, 4]),
    "C6": cycle_graph(6),
}
for name, g in examples.items():
    mp = is_complete_multipartite(g)
    cu = is_clique_union(g)
    print(
        f"{name:14s} multipartite parts: {mp.parts if mp else '-'!s:12s} "
        f"clique sizes: {cu.parts if cu else '-'}"
    )

print()
print("=== Membership of the whole degree class ===")
ds = degree_sequence(clique_union([3, 3, 4]))
print(f"degrees of K3 u K3 u K4: {list(ds)}")
print("clique-union profile from degrees:", clique_union_profile_from_degrees(ds).parts)
print("multipartite profile from degrees:", multipartite_profile_from_degrees(ds))

dual = degree_sequence(complement(clique_union([3, 3, 4])))
print(f"degrees of the complement:        {list(dual)}")
print("multipartite profile from degrees:", multipartite_profile_from_degrees(dual).parts)

print()
print("=== Divisibility in action ===")
for values in [[2] * 6 + [3] * 4, [2, 2, 2, 2], [1, 1, 1, 1], [0, 0, 0]]:
    ds = DegreeSequence(values)
    cu = clique_union_profile_from_degrees(ds)
    print(
        f"degrees {values}: graphical={is_graphical(ds)} "
        f"clique-union profile={cu.parts if cu else None}"
    )

print()
print("C6 is degree-equivalent to K3 u K3 but is not a clique union itself:")
c6 = cycle_graph(6)
print("  degrees:", list(degree_sequence(c6)))
print("  profile from degrees:", clique_union_profile_from_degrees(degree_sequence(c6)).parts)
print("  is_clique_union:", is_clique_union(c6))
