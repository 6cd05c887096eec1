"""
From Jordan pairs to e6 and e7
==============================

The Tits-Kantor-Koecher construction turns a Jordan pair into a 3-graded Lie
algebra. A grading of the pair extends to the Lie algebra, and automorphisms
of the pair act on the universal group of a grading.
"""

import time

from exjordan import autos as au
from exjordan import gradings as grd
from exjordan import jordan as jd
from exjordan import tkk as tk

for pair in ("bicayley_pair", "albert_pair"):
    t0 = time.perf_counter()
    L = tk.tkk(jd.get_system(pair))
    ok = tk.verify_lie(L, "reduced").ok
    print(f"{pair}: dim {L.dim}, L0 dim {L.level_dim(0)}, Jacobi {ok}"
          f" ({time.perf_counter() - t0:.1f} s)")

# Types of the induced fine gradings on e6.
for name in ("cartan_bicayley_pair", "cd_bicayley_pair"):
    gr = grd.catalog(name)
    G = tk.extend_grading(tk.tkk(gr.system), gr)
    print(name, "type", tk.lie_grading_type(G))

# An automorphism that swaps two idempotents permutes the universal group.
tau = au.build("tau12_bicayley")
print("tau12 is an automorphism:", au.is_automorphism(tau.system, tau))
print("isometry, det:", au.isometry_check(tau.plus))
