"""Build the length-7 Hamming code and the two nonlinear length-15 codes,
then print their basic parameters."""

from perfcodes import code_stats, named_code, named_lambda
from perfcodes.core import fmt_support

h7 = named_code("hamming7_paper")
print("Hamming code of length 7, spanned by")
for g in h7.basis:
    print("   ", fmt_support(g))
print("weights:", code_stats(h7).weight_distribution)

# Each lambda is 0 on four codewords of H7 and 1 on the other twelve.
for name in ("V22_1", "V3_11"):
    lam = named_lambda(name)
    zeros = sorted(lam.zero_set(), key=lambda y: (y.bit_count(), y))
    print(f"\n{name}: lambda vanishes on", ", ".join(fmt_support(y) for y in zeros))
    st = code_stats(named_code(name))
    print(f"  n={st.n}  |C|={st.size}  rank={st.rank}  |Ker|={st.kernel_size}  perfect={st.is_perfect} ({st.perfect_method})")

# With the zero lambda the construction gives back a Hamming code.
h15 = named_code("hamming15")
print("\nvasiliev(H7, 0): rank", code_stats(h15).rank, "- linear, the length-15 Hamming code")
