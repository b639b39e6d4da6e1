import random

import pytest

from mackeydade.exactla import ExactMatrix
from mackeydade.groups import make_group
from mackeydade.mackey.algebra import (IllFormedWord, MackeyBasisElement, basis_count_oracle,
                                       build_algebra)
from mackeydade.mackey.functors import burnside_functor, permutation_functor

SMALL = ["C1", "C2", "C3", "C4", "C2xC2"]


@pytest.mark.parametrize("name,dim", [("C1", 1), ("C2", 6), ("C4", 21), ("C2xC2", 53), ("D8", 306)])
def test_dimension(name, dim):
    G = make_group(name)
    assert build_algebra(G).dim == dim == basis_count_oracle(G)


@pytest.mark.parametrize("name", ["C3", "C2xC4", "Q8", "C2xC2xC2"])
def test_dimension_against_oracle(name):
    G = make_group(name)
    assert build_algebra(G).dim == basis_count_oracle(G)


def test_size_guard():
    with pytest.raises(ValueError):
        build_algebra(make_group("C16"))


def test_c2_mackey_relation():
    G = make_group("C2")
    A = build_algebra(G)
    one, top = 0, 1
    rt = A.normalize_product([A.r(top, one)], [A.t(top, one)])
    assert rt == A.normalize([A.c(0, one)]) | A.normalize([A.c(1, one)])
    assert set(rt.values()) == {1} and len(rt) == 2
    tr = A.normalize([A.t(top, one), A.r(top, one)])
    sq = A.normalize([A.t(top, one), A.r(top, one), A.t(top, one), A.r(top, one)])
    assert sq == {b: 2 * v for b, v in tr.items()}


def test_mismatched_idempotents_vanish():
    A = build_algebra(make_group("C2xC2"))
    assert A.normalize([A.r(1, 1), A.r(2, 2)]) == {}
    assert A.normalize([A.e(3), A.e(3)]) == A.normalize([A.e(3)])


def test_ill_formed_words():
    A = build_algebra(make_group("C2xC2"))
    with pytest.raises(IllFormedWord):
        A.r(1, 4)
    with pytest.raises(IllFormedWord):
        A.t(1, 2)
    with pytest.raises(IllFormedWord):
        A.c(7, 0)
    with pytest.raises(IllFormedWord):
        A.normalize([])


@pytest.mark.parametrize("name", SMALL + ["D8"])
def test_unit(name):
    A = build_algebra(make_group(name))
    one = A.unit()
    rng = random.Random(name)
    for b in rng.sample(A.basis, min(100, A.dim)):
        assert A.multiply(one, {b: 1}) == {b: 1} == A.multiply({b: 1}, one)


@pytest.mark.parametrize("name", SMALL)
def test_basis_words_are_normal(name):
    A = build_algebra(make_group(name))
    for b in A.basis:
        assert A.normalize(A.word(b)) == {b: 1}


@pytest.mark.parametrize("name", SMALL)
def test_closure_equals_basis(name):
    A = build_algebra(make_group(name))
    assert A.closure_normal_forms() == set(A.basis)


@pytest.mark.parametrize("name", ["C2", "C4", "C2xC2"])
def test_associativity(name):
    A = build_algebra(make_group(name))
    for x, y, z in A.random_triples(500, seed=1):
        assert A.multiply(A.product(x, y), {z: 1}) == A.multiply({x: 1}, A.product(y, z))


def _action(M, A, b: MackeyBasisElement) -> ExactMatrix:
    """The matrix of a basis element on the direct sum of all evaluations of M."""
    L = A.lattice
    offs, n = {}, 0
    for h in range(len(L)):
        offs[h] = n
        n += M.dims[h]
    gL = L.conj_idx[b.g][b.L]
    blk = M.tr(b.H, gL) @ M.conj(b.g, b.L) @ M.res(b.K, b.L)
    rows = [[0] * n for _ in range(n)]
    for i in range(blk.nrows):
        for j in range(blk.ncols):
            rows[offs[b.H] + i][offs[b.K] + j] = blk[i, j]
    return ExactMatrix(rows, n)


def _combo(M, A, combo, n):
    out = ExactMatrix.zeros(n, n)
    for z, c in combo.items():
        out = out + _action(M, A, z).scale(c)
    return out


@pytest.mark.parametrize("name", ["C2", "C4", "C2xC2", "D8"])
def test_products_act_correctly_on_functors(name):
    """Structure constants agree with composing the maps of concrete Mackey functors."""
    G = make_group(name)
    A = build_algebra(G)
    functors = [burnside_functor(G), permutation_functor(G, G.trivial)]
    rng = random.Random(name)
    pairs = [(x, rng.choice([y for y in A.basis if y.H == x.K])) for x in rng.sample(A.basis, min(60, A.dim))]
    for M in functors:
        n = sum(M.dims.values())
        for x, y in pairs:
            assert _action(M, A, x) @ _action(M, A, y) == _combo(M, A, A.product(x, y), n)
        assert _combo(M, A, A.unit(), n) == ExactMatrix.identity(n)
