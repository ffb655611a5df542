"""The order identity |Sym| |Tr| = |Rot| |Ker|, each factor computed on its own."""

from perfcodes import named_code, order_identity_check

print(f"{'code':>15} {'Sym':>5} {'Tr':>6} {'Rot':>5} {'Ker':>5}  identity  Sym<=Rot<=Sym(Ker)")
for name in ("hamming7_paper", "V22_1", "V3_11"):
    e = order_identity_check(named_code(name), name).extra
    chain = e["sym_le_rot"] and e["rot_le_sym_ker"]
    print(f"{name:>15} {e['sym']:>5} {e['tr']:>6} {e['rot']:>5} {e['ker']:>5}  {e['lhs']}={e['rhs']}  {chain}")
