from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from mackeydade.burnside import (BurnsideElement, GroupMismatch, burnside_mult, lin_kernel,
                                 lin_matrix, mark_table, permutation_character)
from mackeydade.exactla import ExactMatrix, rank
from mackeydade.groups import BUILTINS, all_subgroups, make_group, normalizer


def test_c2_mark_table():
    T = mark_table(make_group("C2")).matrix
    assert T == ExactMatrix([[2, 0], [1, 1]])


@pytest.mark.parametrize("name", BUILTINS)
def test_mark_table_shape(name):
    G = make_group(name)
    L = all_subgroups(G)
    T = mark_table(G).matrix
    for h in range(T.nrows):
        H = L.rep(h)
        assert T[h, 0] == G.order // H.order
        assert T[h, h] == normalizer(G, H).order // H.order
        assert all(T[h, k] == 0 for k in range(h + 1, T.ncols))


@pytest.mark.parametrize("name", ["C4", "C2xC2", "D8", "Q8", "C3xC3"])
def test_marks_against_coset_oracle(name):
    G = make_group(name)
    L = all_subgroups(G)
    T = mark_table(G)
    for h in range(len(L.classes)):
        for k in range(len(L.classes)):
            assert T.mark(k, h) == oracles.fixed_cosets(G, L.rep(k).members, L.rep(h).members)


def test_products():
    G = make_group("C2xC2")
    L = all_subgroups(G)
    one = BurnsideElement.basis(G, len(L.classes) - 1)
    free = BurnsideElement.basis(G, 0)
    A, B = BurnsideElement.basis(G, 1), BurnsideElement.basis(G, 2)
    assert one * A == A
    assert free * free == 4 * free
    assert A * B == free


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        BurnsideElement.zero(make_group("C2")) * BurnsideElement.zero(make_group("C4"))


@pytest.mark.parametrize("name", ["C4", "C2xC2", "D8", "Q8", "C2xC4", "M16", "He27"])
@given(data=st.data())
def test_mark_homomorphism(name, data):
    G = make_group(name)
    m = len(all_subgroups(G).classes)
    coords = st.lists(st.integers(-5, 5), min_size=m, max_size=m)
    a = BurnsideElement(G, tuple(map(Fraction, data.draw(coords))))
    b = BurnsideElement(G, tuple(map(Fraction, data.draw(coords))))
    assert burnside_mult(a, b).marks() == tuple(x * y for x, y in zip(a.marks(), b.marks()))


@pytest.mark.parametrize("name,shape,r", [("C4", (3, 3), 3), ("C2xC2", (4, 5), 4), ("D8", (5, 8), 5)])
def test_lin_matrix_examples(name, shape, r):
    M = lin_matrix(make_group(name))
    assert M.shape == shape and rank(M) == r


@pytest.mark.parametrize("name", BUILTINS)
def test_lin_kernel_dimension(name):
    G = make_group(name)
    L = all_subgroups(G)
    K = lin_kernel(G)
    assert K.ncols == len(L.noncyclic_classes())
    assert rank(lin_matrix(G)) == len(L.cyclic_classes())


def test_lin_kernel_examples():
    assert lin_kernel(make_group("C8")).ncols == 0
    assert lin_kernel(make_group("D8")).ncols == 3
    v = lin_kernel(make_group("C2xC2")).column(0)
    assert [x / v[0] for x in v] == [1, -1, -1, -1, 2]


def test_permutation_character_of_regular_set():
    G = make_group("Q8")
    chi = permutation_character(G, G.trivial)
    assert chi[0] == 8 and all(x == 0 for x in chi[1:])
