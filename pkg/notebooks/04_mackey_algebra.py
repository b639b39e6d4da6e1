# The Mackey algebra of a small group, built by rewriting words to t.c.r form.

from mackeydade import build_algebra, make_group
from mackeydade.mackey.algebra import basis_count_oracle

C2 = make_group("C2")
A = build_algebra(C2)
print("dim mu(C2) =", A.dim)
for b in A.basis:
    print("  ", b)

one, top = 0, 1
print("r t =", A.normalize([A.r(top, one), A.t(top, one)]))
tr = A.normalize([A.t(top, one), A.r(top, one)])
print("(t r)^2 =", A.normalize([A.t(top, one), A.r(top, one)] * 2), "vs t r =", tr)

for name in ("C4", "C2xC2", "Q8", "D8"):
    G = make_group(name)
    print(f"dim mu({name}) = {build_algebra(G).dim}  (direct count {basis_count_oracle(G)})")
