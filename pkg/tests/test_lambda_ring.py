import random

import pytest

import oracles
from mackeydade.burnside import BurnsideElement, burnside_mult
from mackeydade.exactla import rank
from mackeydade.groups import BUILTINS, all_subgroups, double_cosets, make_group, subquotient_classes
from mackeydade.lambda_ring import (LambdaElement, alpha, burnside_embed, burnside_layout,
                                    character_layout,
                                    lambda_mult, lin_mu_direct, lin_mu_kernel, lin_mu_via_alpha,
                                    sq_ss_bijection)


def sq_index(P, big, small):
    return subquotient_classes(P).class_of(P.subgroup(big), P.subgroup(small))


def test_unit_is_whole_over_trivial():
    P = make_group("C2xC2")
    one = LambdaElement.unit(P)
    for c in range(len(subquotient_classes(P))):
        x = LambdaElement.basis(P, c)
        assert lambda_mult(one, x) == x


def test_klein_products():
    P = make_group("C2xC2")
    A, B = [H.members for H in all_subgroups(P).subgroups if H.order == 2][:2]
    aa = LambdaElement.basis(P, sq_index(P, A, A))
    bb = LambdaElement.basis(P, sq_index(P, B, B))
    assert lambda_mult(aa, aa) == 2 * aa
    assert all(x == 0 for x in lambda_mult(aa, bb).coords)


def _brute_product(P, a, b):
    """The basis product straight from the double-coset formula, on frozensets."""
    SQ = subquotient_classes(P)
    R, N = SQ.rep(a).big, SQ.rep(a).small
    S, M = SQ.rep(b).big, SQ.rep(b).small
    t = P.table
    out = {}
    for x in double_cosets(P, R, S):
        xS = oracles.conj_set(P, S.members, x)
        xM = oracles.conj_set(P, M.members, x)
        big = frozenset(R.members) & xS
        small = frozenset(t[m][n] for m in xM for n in N.members)
        if small <= big:
            c = SQ.class_of(P.subgroup(big), P.subgroup(small))
            out[c] = out.get(c, 0) + 1
    return out


@pytest.mark.parametrize("name", ["C4", "C2xC2", "D8", "Q8", "C3xC3"])
def test_product_against_set_formula(name):
    P = make_group(name)
    n = len(subquotient_classes(P))
    for a in range(n):
        for b in range(n):
            got = lambda_mult(LambdaElement.basis(P, a), LambdaElement.basis(P, b))
            want = _brute_product(P, a, b)
            assert {c: x for c, x in enumerate(got.coords) if x} == want


@pytest.mark.parametrize("name", BUILTINS)
def test_ring_axioms(name):
    P = make_group(name)
    n = len(subquotient_classes(P))
    rng = random.Random(name)
    B = lambda c: LambdaElement.basis(P, c)
    for _ in range(60):
        a, b, c = (B(rng.randrange(n)) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("name", ["C2", "C2xC2", "D8", "C9"])
def test_burnside_embedding(name):
    P = make_group(name)
    m = len(all_subgroups(P).classes)
    for i in range(m):
        for j in range(m):
            x, y = BurnsideElement.basis(P, i), BurnsideElement.basis(P, j)
            assert burnside_embed(burnside_mult(x, y)) == burnside_embed(x) * burnside_embed(y)
    top = BurnsideElement.basis(P, m - 1)
    assert burnside_embed(top) == LambdaElement.unit(P)


def test_embedding_of_free_orbit():
    P = make_group("C2")
    assert burnside_embed(BurnsideElement.basis(P, 0)) == LambdaElement.basis(P, sq_index(P, [0], [0]))


@pytest.mark.parametrize("name", BUILTINS)
def test_alpha_invertible(name):
    P = make_group(name)
    A = alpha(P)
    assert A.nrows == A.ncols == rank(A)


def test_alpha_unit_column():
    P = make_group("D8")
    lay = burnside_layout(P)
    col = alpha(P).column(LambdaElement.unit(P).coords.index(1))
    for blk, W in zip(lay.split(col), lay.weyls):
        point = len(all_subgroups(W.group).classes) - 1
        assert [int(x) for x in blk] == [int(i == point) for i in range(len(blk))]


def test_alpha_klein_example():
    P = make_group("C2xC2")
    lay = burnside_layout(P)
    A = P.subgroup([0, 1])
    col = alpha(P).column(subquotient_classes(P).class_of(P.whole, A))
    blocks = lay.split(col)
    for R, blk in zip(lay.reps, blocks):
        if R in (A, P.whole):
            assert list(blk) == [0] * (len(blk) - 1) + [1]
        else:
            assert not any(blk)


def test_alpha_vanishes_on_small_big():
    P = make_group("D8")
    SQ = subquotient_classes(P)
    lay = burnside_layout(P)
    M = alpha(P)
    for c in range(len(SQ)):
        for R, blk in zip(lay.reps, lay.split(M.column(c))):
            if R.order > SQ.rep(c).big.order:
                assert not any(blk)


@pytest.mark.parametrize("name,count", [("C2xC2", 12), ("D8", 24)])
def test_bijection_roundtrips(name, count):
    bij = sq_ss_bijection(make_group(name))
    assert len(bij.f) == len(bij.ss_elements) == count
    assert bij.roundtrip_sq() and bij.roundtrip_ss()


@pytest.mark.parametrize("name", BUILTINS)
def test_linearizations_agree(name):
    P = make_group(name)
    assert lin_mu_direct(P) == lin_mu_via_alpha(P)


@pytest.mark.parametrize("name,dim", [("C4", 0), ("C2", 0), ("C2xC2", 1), ("D8", 4), ("Q8", 2)])
def test_lin_mu_kernel_examples(name, dim):
    assert lin_mu_kernel(make_group(name)).ncols == dim


def test_unit_maps_to_trivial_characters():
    P = make_group("D8")
    D = lin_mu_direct(P)
    col = D.column(LambdaElement.unit(P).coords.index(1))
    for blk in character_layout(P).split(col):
        assert all(x == 1 for x in blk)


def test_free_orbit_maps_to_regular_character():
    P = make_group("Q8")
    col = lin_mu_direct(P).column(sq_index(P, [0], [0]))
    blocks = character_layout(P).split(col)
    assert list(blocks[0]) == [8] + [0] * (len(blocks[0]) - 1)
    assert not any(x for blk in blocks[1:] for x in blk)


def test_reflection_block_of_unit_has_one_term():
    P = make_group("D8")
    lay = character_layout(P)
    s = P.subgroup([0, 4])
    L = all_subgroups(P)
    b = next(i for i, R in enumerate(lay.reps) if L.class_index(R) == L.class_index(s))
    blk = lay.split(lin_mu_direct(P).column(LambdaElement.unit(P).coords.index(1)))[b]
    # trivial character of W = C2: value 1 on both cyclic classes
    assert list(blk) == [1, 1]
