import random

import pytest

from mackeydade.exactla import ExactMatrix
from mackeydade.groups import BUILTINS, all_subgroups, is_normal, make_group
from mackeydade.mackey.functors import (bar, bar_family, burnside_functor, check_bar_compatibility,
                                        check_relations, fixed_point_functor, jef_res_bar_dim,
                                        permutation_functor, restrict, twin_dual)

SMALL = ["C2", "C4", "C3", "C2xC2", "D8", "Q8", "C2xC4"]


def test_burnside_dimensions():
    G = make_group("C2")
    B = burnside_functor(G)
    assert B.dims == {0: 1, 1: 2}
    # induction of the point is the free orbit [C2/1]
    assert B.tr(1, 0) == ExactMatrix([[1], [0]])


@pytest.mark.parametrize("fld", ["Q", "Fp"])
def test_burnside_relations_klein(fld):
    rep = check_relations(burnside_functor(make_group("C2xC2"), fld))
    # one Mackey-formula instance per (H, J, K) with J, K <= H: 1 + 3 * 2^2 + 5^2
    assert rep.ok and rep.checked["mackey"] == 38


def test_fixed_point_transfer_scalars():
    G = make_group("C4")
    assert fixed_point_functor(G, "Q").tr(2, 1) == ExactMatrix([[2]])
    assert fixed_point_functor(G, "Fp").tr(2, 1) == ExactMatrix([[0]], field=2)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("fld", ["Q", "Fp"])
def test_relations_hold(name, fld):
    G = make_group(name)
    L = all_subgroups(G)
    functors = [burnside_functor(G, fld), fixed_point_functor(G, fld)]
    functors += [permutation_functor(G, L.rep(c), fld) for c in range(len(L.classes))]
    for M in functors:
        rep = check_relations(M)
        assert rep.ok, (M.name, sorted(rep.failures))
        assert bar_family(M).check()


def test_broken_functor_is_caught():
    G = make_group("C2xC2")
    B = burnside_functor(G)
    key = next(iter(B.tmaps))
    B.tmaps[key] = B.tmaps[key].scale(2)
    B._cache.clear()
    rep = check_relations(B)
    assert not rep.ok and "mackey" in rep.failures


@pytest.mark.parametrize("name", BUILTINS)
@pytest.mark.parametrize("fld", ["Q", "Fp"])
def test_bar_of_burnside_is_one_dimensional(name, fld):
    B = burnside_functor(make_group(name), fld)
    assert all(bar(B, h).dim == 1 for h in B.subs)


@pytest.mark.parametrize("name", ["C4", "D8", "C3xC3"])
def test_bar_of_fixed_point_functor(name):
    G = make_group(name)
    FQ, FP = fixed_point_functor(G, "Q"), fixed_point_functor(G, "Fp")
    assert [bar(FQ, h).dim for h in FQ.subs] == [1] + [0] * (len(FQ.subs) - 1)
    assert all(bar(FP, h).dim == 1 for h in FP.subs)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("fld", ["Q", "Fp"])
def test_twin_dual_dimensions(name, fld):
    G = make_group(name)
    for M in (burnside_functor(G, fld), fixed_point_functor(G, fld), permutation_functor(G, G.trivial, fld)):
        for q in M.subs:
            tw = twin_dual(M, q)
            assert tw.bar_of_twin_dual == tw.bar
            if fld == "Q":
                assert tw.twin_dual == tw.evaluation == tw.twin
        assert twin_dual(M, 0).twin_dual == M.dims[0]


def test_twin_dual_of_c2_burnside():
    G = make_group("C2")
    assert twin_dual(burnside_functor(G), 1).twin_dual == 2


def test_twin_dual_in_characteristic_p_can_differ():
    # over F_2 the fixed-point functor of C2 has two one-dimensional bars, so M°(C2) is 2-dimensional
    G = make_group("C2")
    tw = twin_dual(fixed_point_functor(G, "Fp"), 1)
    assert (tw.twin_dual, tw.evaluation) == (2, 1)


@pytest.mark.parametrize("name", [n for n in BUILTINS if make_group(n).order <= 8])
def test_bar_equals_jef_of_restriction(name):
    G = make_group(name)
    for M in (burnside_functor(G), permutation_functor(G, G.trivial, "Fp")):
        for h in M.subs:
            assert jef_res_bar_dim(M, h) == bar(M, h).dim


def test_bar_compatibility_d8_instance():
    G = make_group("D8")
    L = all_subgroups(G)
    B = burnside_functor(G)
    Va, Z = L.idx(G.subgroup([0, 2, 4, 6])), L.idx(G.subgroup([0, 2]))
    r = check_bar_compatibility(B, 1, Z, k=Va)
    assert r.ok and r.dim_left == r.dim_right == 1
    assert len(r.traces_left) == 4


def test_bar_compatibility_c4_instance():
    G = make_group("C4")
    B = burnside_functor(G)
    r = check_bar_compatibility(B, 2, 2, n=1)
    assert r.ok and r.dim_left == r.dim_right


def test_bar_compatibility_at_trivial_subgroup():
    G = make_group("D8")
    M = permutation_functor(G, G.trivial, "Fp")
    for k in range(len(all_subgroups(G))):
        r = check_bar_compatibility(M, 1, 0, k=k)
        assert r.ok and r.dim_left == M.dims[0] == 8


@pytest.mark.parametrize("name", ["C4", "C2xC2", "D8", "Q8"])
@pytest.mark.parametrize("fld", ["Q", "Fp"])
def test_bar_compatibility_everywhere(name, fld):
    G = make_group(name)
    L = all_subgroups(G)
    for c in range(len(L.classes)):
        M = permutation_functor(G, L.rep(c), fld)
        for k in range(len(L)):
            for h in L.below(k):
                assert check_bar_compatibility(M, 1, h, k=k).ok
        for n in range(len(L)):
            if is_normal(G, L.subgroups[n]):
                for h in range(len(L)):
                    if L.contains(n, h):
                        assert check_bar_compatibility(M, 2, h, n=n).ok


def test_part_two_needs_normal_subgroup():
    G = make_group("D8")
    L = all_subgroups(G)
    with pytest.raises(ValueError):
        check_bar_compatibility(burnside_functor(G), 2, L.idx(G.whole), n=L.idx(G.subgroup([0, 4])))


def test_restriction_keeps_maps():
    G = make_group("D8")
    L = all_subgroups(G)
    B = burnside_functor(G)
    V = G.subgroup([0, 2, 4, 6])
    R = restrict(B, V)
    assert set(R.subs) == set(L.below(L.idx(V)))
    assert check_relations(R, random.Random(0)).ok
