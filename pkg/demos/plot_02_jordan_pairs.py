"""
The bi-Cayley and Albert pairs
==============================

Both exceptional Jordan pairs are stored as exact integer structure tensors
for the triple products. The axioms are checked on every basis triple (linear
identities) and on random elements (quadratic identities).
"""

import time

from exjordan import jordan as jd

for name in ("bicayley_pair", "bicayley_triple"):
    s = jd.get_system(name)
    t0 = time.perf_counter()
    lin = jd.verify_linear_axioms(s)
    quad = jd.verify_quadratic_axioms(s, seed=0, trials=20)
    print(f"{name:16s} dim {s.dim('+'):3d}  linear {lin.ok}  quadratic {quad.ok}"
          f"  ({time.perf_counter() - t0:.1f} s)")

# The bi-Cayley pair is a copy of the pair of 1x2 matrices over the octonions.
plus, minus = jd.m12_isomorphism()
print("V_B isomorphic to M_1x2:",
      jd.verify_pair_isomorphism(jd.bicayley_pair(), jd.m12_pair(), plus, minus))

# Rank and orbit labels agree on rank-one elements of the triple system.
tb = jd.bicayley_triple()
for k in (0, 2, 8):
    v = tb.basis_vector("+", k)
    print("basis", k, "rank", jd.rank_element(tb, "+", v), "orbit", jd.orbit_label_triple(v).name)
