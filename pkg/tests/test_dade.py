import random

import pytest

from mackeydade.dade import (ClassMismatch, DadeBasis, dade_dim, dade_restrict, dade_transport,
                             delta_position, dmu_dim, dmu_offsets, dmu_weyls, jef_res_map,
                             underline_dmu)
from mackeydade.exactla import ExactMatrix, nullspace
from mackeydade.groups import BUILTINS, all_subgroups, is_cyclic, make_group, normalizer, subquotient_classes
from mackeydade.lambda_ring import lin_mu_kernel

NONCYCLIC = [n for n in BUILTINS if not is_cyclic(make_group(n).whole)]
CYCLIC = [n for n in BUILTINS if n not in NONCYCLIC]


@pytest.mark.parametrize("name,d", [("C8", 0), ("C2xC2", 1), ("Q8", 1), ("D8", 3)])
def test_dade_dim(name, d):
    assert dade_dim(make_group(name)) == d


@pytest.mark.parametrize("name,d", [("C2xC2", 1), ("D8", 4), ("Q8", 2), ("C4", 0)])
def test_dmu_dim(name, d):
    assert dmu_dim(make_group(name)) == d


@pytest.mark.parametrize("name", BUILTINS)
def test_dmu_dim_matches_lin_mu_kernel(name):
    P = make_group(name)
    assert dmu_dim(P) == lin_mu_kernel(P).ncols


def test_restrict_to_self_is_identity():
    P = make_group("D8")
    assert dade_restrict(P, P.whole) == ExactMatrix.identity(3)


def test_d8_restriction_to_klein():
    P = make_group("D8")
    Va = P.subgroup([0, 2, 4, 6])
    R = dade_restrict(P, Va)
    assert R == ExactMatrix([[2, 0, 0]])


@pytest.mark.parametrize("name", NONCYCLIC)
def test_self_restriction_coefficient(name):
    P = make_group(name)
    B = DadeBasis(P)
    for k in range(len(B)):
        Q = B.rep(k)
        col = dade_restrict(P, Q).column(k)
        j = DadeBasis(P, Q).class_index(Q)
        assert col[j] == normalizer(P, Q).order // Q.order
        assert sum(col) == col[j]


@pytest.mark.parametrize("name", NONCYCLIC)
def test_top_class_dies_on_proper_subgroups(name):
    P = make_group(name)
    t = DadeBasis(P).class_index(P.whole)
    for V in all_subgroups(P).subgroups[:-1]:
        assert not any(dade_restrict(P, V).column(t))


@pytest.mark.parametrize("name", NONCYCLIC)
def test_restriction_transitive(name):
    P = make_group(name)
    L = all_subgroups(P)
    rng = random.Random(name)
    for _ in range(25):
        w = rng.randrange(len(L))
        v = rng.choice(L.below(w))
        u = rng.choice(L.below(v))
        W, V, U = L.subgroups[w], L.subgroups[v], L.subgroups[u]
        assert dade_restrict(P, U, V) @ dade_restrict(P, V, W) == dade_restrict(P, U, W)


def test_transport_identity_and_permutation():
    P = make_group("D8")
    B = DadeBasis(P)
    assert dade_transport(B, B, lambda x: x) == ExactMatrix.identity(3)
    # conjugation by a reflection fixes both Klein four classes
    t, inv = P.table, P.inverse
    assert dade_transport(B, B, lambda x: t[t[4][x]][inv[4]]) == ExactMatrix.identity(3)
    V = make_group("C2xC2")
    BV = DadeBasis(V)
    swap = {0: 0, 1: 2, 2: 1, 3: 3}
    assert dade_transport(BV, BV, swap) == ExactMatrix.identity(1)


def test_transport_rejects_non_isomorphism():
    P = make_group("D8")
    B = DadeBasis(P)
    with pytest.raises(ClassMismatch):
        dade_transport(B, B, lambda x: 0)


def test_jef_res_identity_on_whole():
    P = make_group("D8")
    assert jef_res_map(P, P.whole, P.trivial) == ExactMatrix.identity(4)


def test_klein_proper_subquotients_have_zero_targets():
    P = make_group("C2xC2")
    SQ = subquotient_classes(P)
    top = SQ.class_of(P.whole, P.trivial)
    for c in range(len(SQ)):
        if c != top:
            M = jef_res_map(P, SQ.rep(c).big, SQ.rep(c).small)
            assert M.nrows == 0 and M.ncols == 1


def test_d8_center_deflation_kills_weyl_block():
    P = make_group("D8")
    Z = P.subgroup([0, 2])
    M = jef_res_map(P, P.whole, Z)
    offs = dmu_offsets(P)
    b = next(i for i, W in enumerate(dmu_weyls(P)) if W.kernel == Z)
    cols = range(offs[b], offs[b] + dade_dim(dmu_weyls(P)[b].group))
    K = nullspace(M)
    assert K.ncols > 0
    assert all(K[i, j] == 0 for i in cols for j in range(K.ncols))


@pytest.mark.parametrize("name", NONCYCLIC)
def test_delta_generates_common_kernel(name):
    P = make_group(name)
    B = underline_dmu(P)
    assert B.ncols == 1
    pos = delta_position(P)
    assert [i for i in range(B.nrows) if B[i, 0]] == [pos]


@pytest.mark.parametrize("name", CYCLIC)
def test_cyclic_groups_have_no_dade_classes(name):
    P = make_group(name)
    assert dmu_dim(P) == 0
    assert underline_dmu(P).ncols == 0
    assert delta_position(P) is None
