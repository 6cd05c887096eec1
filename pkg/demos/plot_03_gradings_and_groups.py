"""
Fine gradings and their universal groups
========================================

Each catalog entry assigns a degree to every basis vector. A grading is
valid when every triple product of homogeneous elements lands in the
expected degree; the universal group is read off from the Smith normal form
of the relations the products impose.
"""

from exjordan import gradings as grd

print(f"{'grading':28s} {'valid':6s} universal group")
for name in grd.CATALOG:
    gr = grd.catalog(name)
    ok = grd.verify_grading(gr).ok
    u = grd.universal_group(gr)
    print(f"{name:28s} {str(ok):6s} {u.group}")

# Coordinates of individual generators in the universal group.
u = grd.universal_group(grd.catalog("cartan_bicayley_pair"))
print("moduli:", u.moduli)
