"""Lifting lambda up the Hamming tower, and the reduction that carries
non-transitivity from length 15 to lengths 31 and 63."""

from perfcodes import lambda_lift, named_code, named_lambda, transitivity_reduction
from perfcodes.core import rank
from perfcodes.vasiliev import block_rotation, maps_onto

lam = named_lambda("V22_1")
for levels in (1, 2):
    top = lambda_lift(lam, levels)
    print(f"lambda on H^{top.base.n}: balance {top.balance()}")

# Doubling V22_1 with the zero lambda and lifting lambda give equivalent codes.
phi = block_rotation(7)
doubled, lifted = named_code("V22_1_doubled"), named_code("V22_1_lifted")
print("\nblock rotation maps vasiliev(V22_1, 0) onto vasiliev(H15, lambda_15):", maps_onto(phi, doubled, lifted))
print("rank of the length-31 code:", rank(lifted))

for levels in (1, 2):
    rep = transitivity_reduction(lam, levels)
    prop = rep.extra["piercing_propagation"]
    print(f"\n{rep.method_notes[0]}")
    print(f"  hypotheses {rep.extra['hypotheses']}")
    print(f"  piercing propagation: {sum(p['R_j'] and p['R_j_plus_half'] for p in prop)}/{len(prop)}")
    print(f"  code size 2^{rep.sizes['size'].bit_length() - 1}, rank {rep.sizes['rank']}")
