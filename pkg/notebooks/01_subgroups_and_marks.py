# Subgroups, marks and the linearization map of a small 2-group.
#
# Everything is exact: entries are Fractions (or residues mod p), never floats.

from mackeydade import all_subgroups, lin_kernel, lin_matrix, make_group, mark_table
from mackeydade.burnside import BurnsideElement

D8 = make_group("D8")
L = all_subgroups(D8)
print(D8, "has", len(L.subgroups), "subgroups in", len(L.classes), "classes")

# class representatives, smallest first
for c in range(len(L.classes)):
    H = L.rep(c)
    print(f"  class {c}: order {H.order:2d}  size {len(L.classes[c])}  rep {H.members}")

# The table of marks is lower triangular in this order; row H is G/H.
T = mark_table(D8).matrix
for row in T.to_strings():
    print("  ", " ".join(x.split("/")[0].rjust(2) for x in row))

# Products of G-sets multiply their marks pointwise.
a = BurnsideElement.basis(D8, 2)
b = BurnsideElement.basis(D8, 5)
print("marks of [G/H2][G/H5]:", [str(x) for x in (a * b).marks()])
print("pointwise product:    ", [str(x * y) for x, y in zip(a.marks(), b.marks())])

# Sending a G-set to its permutation character forgets exactly the
# non-cyclic subgroup classes.
print("Lin is", lin_matrix(D8).shape, "with kernel of dimension", lin_kernel(D8).ncols)
print("non-cyclic classes:", len(L.noncyclic_classes()))
