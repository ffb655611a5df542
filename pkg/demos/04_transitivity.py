"""Transitivity through the translator criterion.

A base word y' is a translator when some pi in Sym(H7) and u in F^7 satisfy
lambda(y') + lambda(y) + lambda(y' + pi(y)) = u.y for all y in H7.  If some
y' has no solution, the code is not transitive.
"""

from perfcodes import is_transitive, named_code, rot_z_brute, rot_z_criterion
from perfcodes.core import fmt_support
from perfcodes.groups import translator_witness

for name in ("V22_1", "V3_11"):
    V = named_code(name)
    rep = is_transitive(V, name)
    print(f"{name}: transitive={rep.transitive}; {len(rep.failing_translators)} of 16 base words fail")
    print("   ", "  ".join(rep.failing_translators))
    ok = next(y for y in V.base if y and translator_witness(V, y))
    pi, u = translator_witness(V, ok)
    print(f"    e.g. y' = {fmt_support(ok)} works with pi = {pi} and u = {fmt_support(u)}")

# The criterion against an exhaustive search over all of S7 x F^7 at one codeword.
V = named_code("V3_11")
z = next(w for w in sorted(V) if w and rot_z_criterion(V, w))
crit, brute = rot_z_criterion(V, z), rot_z_brute(V, z)
print(f"\nRot_z at z = {fmt_support(z)}: criterion {len(crit)} elements, brute force {len(brute)}, equal: {crit == brute}")
