# Rational Dade groups in the basis Ten_R Delta(R), and the Mackey-Dade model.

from mackeydade import (DadeBasis, dade_restrict, delta_position, dmu_dim, make_group,
                        underline_dmu)

D8 = make_group("D8")
B = DadeBasis(D8)
print("QD(D8) has basis classes:", [B.rep(k).members for k in range(len(B))])

# Restricting to a Klein four group keeps its own class, scaled by |N:Q|,
# and kills the others.
Va = D8.subgroup([0, 2, 4, 6])
print("Res to V4_a:", dade_restrict(D8, Va).to_strings())

for name in ("C2xC2", "D8", "Q8", "C8", "He27"):
    P = make_group(name)
    K = underline_dmu(P)
    support = [i for i in range(K.nrows) for j in range(K.ncols) if K[i, j]]
    print(f"{name:6s} dim QD_mu = {dmu_dim(P)}  common kernel dim = {K.ncols}  "
          f"support {support}  Delta at {delta_position(P)}")
