"""Neighbourhood Steiner triple systems and the doubling that produces them."""

from perfcodes import am_doubling, are_isomorphic, fano, named_code, named_lambda, neighborhood_sts, theta_from_lambda
from perfcodes.groups import sts_automorphisms
from perfcodes.sts import invariants

F = fano()
print("Fano plane:", F)
print("automorphisms:", sts_automorphisms(F).order)

for name in ("hamming15", "V22_1", "V3_11"):
    S = neighborhood_sts(named_code(name), 0)
    inv = invariants(S)
    print(f"\nSTS({name}, 0): {inv.triple_count} triples, {inv.pasch_count} Pasch configurations")
    print("  Pasch degrees (degree, points):", inv.pasch_degree_multiset)
    print("  automorphism group order:", sts_automorphisms(S).order)

# The neighbourhood of a lifted codeword is the doubling of the base
# neighbourhood by theta(y + y') = lambda(y) + lambda(y').
h7, V, lam = named_code("hamming7_paper"), named_code("V22_1"), named_lambda("V22_1")
agree = sum(
    am_doubling(neighborhood_sts(h7, y), theta_from_lambda(h7, lam, y)) == neighborhood_sts(V, V.lift(y))
    for y in h7
)
print(f"\ndoubling with theta from lambda reproduces STS(V22_1, z) at {agree}/16 lifted words")

A, B = neighborhood_sts(named_code("V22_1"), 0), neighborhood_sts(named_code("V3_11"), 0)
w = are_isomorphic(A, B)
print("STS(V22_1, 0) and STS(V3_11, 0) isomorphic via", w)
