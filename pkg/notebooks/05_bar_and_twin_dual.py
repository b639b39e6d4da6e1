# Bar construction and twin-dual on concrete Mackey functors.

from mackeydade import (bar, burnside_functor, check_relations, fixed_point_functor,
                        make_group, permutation_functor, twin_dual)

G = make_group("D8")
for fld in ("Q", "Fp"):
    B = burnside_functor(G, fld)
    F = fixed_point_functor(G, fld)
    print(fld, "relations hold:", check_relations(B).ok and check_relations(F).ok)
    print(fld, "bar of Burnside:", [bar(B, h).dim for h in B.subs])
    print(fld, "bar of fixed points:", [bar(F, h).dim for h in F.subs])

# At the trivial subgroup nothing is divided out, so the permutation module
# k[G] keeps its regular action: trace |G| at the identity, 0 elsewhere.
M = permutation_functor(G, G.trivial, "Q")
b = bar(M, 0)
print("k[G]: bar(1) has dim", b.dim, "and traces",
      [int(b.action(g).trace()) for g in G.elements()])

for q in B.subs[:4]:
    tw = twin_dual(burnside_functor(G), q)
    print(f"subgroup {q}: dim M(Q) = {tw.evaluation}, dual twin {tw.twin_dual}, bar {tw.bar}")
