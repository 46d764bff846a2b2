"""
Hamiltonian cycles plus triangles
=================================

Every construction rests on splitting K_v into k Hamiltonian cycles, an
optional 1-factor and triangles.  The edge count decides which k are
possible; the decomposition engine then finds one.
"""

from gdd3 import decompose_mixed, feasible_mixed, verify_decomposition

for v in (7, 9, 11):
    ks = [k for k in range((v - 1) // 2 + 1) if feasible_mixed(v, k, False)]
    print(f"K_{v}: possible cycle counts {ks}")

d = decompose_mixed(9, 1, False)
print("\nK_9 with one Hamiltonian cycle:")
print("  cycle:", d.cycles[0])
print("  triangles:", d.triangles)
print("  check:", verify_decomposition(9, d).summary())

# Even order needs a 1-factor so that every degree becomes even.
d = decompose_mixed(12, 2, True)
print("\nK_12 with two cycles and a 1-factor:")
for c in d.cycles:
    print("  cycle:", c)
print("  factor:", d.one_factor)
print("  triangles:", len(d.triangles))
print("  check:", verify_decomposition(12, d).summary())
