# The ring of subquotients of a p-group and the two ways of linearizing it.

from mackeydade import (LambdaElement, alpha, lin_mu_direct, lin_mu_kernel, lin_mu_via_alpha,
                        make_group, rank, subquotient_classes)

P = make_group("C2xC2")
SQ = subquotient_classes(P)
print(P.name, "has", len(SQ), "subquotient classes [Q, N]")
for c in range(len(SQ)):
    s = SQ.rep(c)
    print(f"  {c:2d}: Q={s.big.members} N={s.small.members} cyclic={SQ.is_cyclic(c)}")

# Two order-two subgroups: squaring [A, A] doubles it, distinct ones annihilate.
aa = LambdaElement.basis(P, SQ.class_of(P.subgroup([0, 1]), P.subgroup([0, 1])))
bb = LambdaElement.basis(P, SQ.class_of(P.subgroup([0, 2]), P.subgroup([0, 2])))
print("[A,A]^2 =", [str(x) for x in (aa * aa).coords])
print("[A,A][B,B] = 0:", not any((aa * bb).coords))

# alpha is an isomorphism onto sums of Burnside rings of the Weyl groups ...
A = alpha(P)
print("alpha:", A.shape, "rank", rank(A))

# ... and the linearization computed directly agrees with the one routed
# through alpha, column by column.
D8 = make_group("D8")
print("D8 direct == via alpha:", lin_mu_direct(D8) == lin_mu_via_alpha(D8))
print("D8 kernel dimension:", lin_mu_kernel(D8).ncols,
      "(non-cyclic subquotients:", len(subquotient_classes(D8).noncyclic_classes()), ")")
