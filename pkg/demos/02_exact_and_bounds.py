#!/usr/bin/env python3
"""Exact solving versus closed-form bounds.

The exact solver is a bitset branch-and-bound with a greedy clique-cover
bound; a subset-enumeration oracle cross-checks it.  The classical bounds are
evaluated in exact rational arithmetic, and for graphs degree-equivalent to a
union of k cliques the sharpened bound k + 1 beats all of them on every
non-canonical member.
"""

from kpartite import (
    brute_force_alpha,
    clique_union,
    compare_bounds,
    complement,
    cycle_graph,
    max_clique,
    max_independent_set,
    petersen_graph,
    validate_certificate,
)

print("=== Exact solving with certificates ===")
for name, g in [
    ("Petersen", petersen_graph()),
    ("C6", cycle_graph(6)),
    ("K3 u K3 u K4", clique_union([3, 3, 4])),
]:
    cert = max_independent_set(g)
    print(
        f"{name:14s} alpha={cert.size} witness={cert.sorted_vertices()} "
        f"valid={validate_certificate(g, cert)} oracle={brute_force_alpha(g)}"
    )

print()
print("independence and clique numbers swap under complement:")
g = petersen_graph()
print(
    f"  alpha(Petersen) = {max_independent_set(g).size}, "
    f"omega(complement) = {max_clique(complement(g)).size}"
)

print()
print("=== Bound comparison on a degree-equivalence class ===")
print("degrees shared by K3 u K3 and C6: both have six vertices of degree 2")
for name, g in [("K3 u K3 (canonical)", clique_union([3, 3])), ("C6", cycle_graph(6))]:
    r = compare_bounds(g, with_exact=True)
    print(f"--- {name}")
    print(f"    caro_wei        = {r.caro_wei}")
    print(f"    turan_alpha     = {r.turan_alpha}")
    print(f"    hansen_zheng    = {r.hansen_zheng}")
    print(f"    sharpened_alpha = {r.sharpened_alpha}")
    print(f"    exact alpha     = {r.exact_alpha}")

print()
print("The classical bounds stop at k = 2 for every graph with these degrees;")
print("the sharpened bound knows that any non-canonical realization reaches 3.")
