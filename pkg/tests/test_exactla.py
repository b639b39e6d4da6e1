from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from mackeydade.burnside import lin_matrix
from mackeydade.exactla import (DimensionError, ExactMatrix, QuotientSpace, block_diag, hstack,
                                multiply, nullspace, rank, rref, solve, vstack)
from mackeydade.groups import make_group


def matrices(max_rows=6, max_cols=6, lo=-4, hi=4):
    return st.integers(1, max_rows).flatmap(lambda m: st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def test_identity_and_zero():
    I = ExactMatrix.identity(5)
    assert rank(I) == 5
    assert nullspace(I).ncols == 0
    Z = ExactMatrix.zeros(3, 3)
    assert rank(Z) == 0
    assert nullspace(Z) == ExactMatrix.identity(3)


def test_klein_mark_matrix_kernel():
    M = lin_matrix(make_group("C2xC2"))
    assert M.shape == (4, 5)
    assert rank(M) == 4
    N = nullspace(M)
    assert N.ncols == 1
    v = N.column(0)
    assert [x / v[0] for x in v] == [1, -1, -1, -1, 2]


def test_entries_are_canonical():
    M = ExactMatrix([[Fraction(2, 4), 3], [-1, 0]])
    assert M[0, 0] == Fraction(1, 2) and isinstance(M[0, 1], Fraction)
    P = ExactMatrix([[7, -1], [12, 5]], field=5)
    assert P.rows == ((2, 4), (2, 0))
    assert ExactMatrix([[Fraction(1, 2)]], field=5)[0, 0] == 3


def test_dimension_errors():
    with pytest.raises(DimensionError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        multiply(ExactMatrix.identity(2), ExactMatrix.identity(3))
    with pytest.raises(DimensionError):
        ExactMatrix.identity(2) + ExactMatrix.identity(3)
    with pytest.raises(DimensionError):
        ExactMatrix.identity(2, 3) @ ExactMatrix.identity(2)
    with pytest.raises(DimensionError):
        solve(ExactMatrix.identity(2), [1, 2, 3])


@given(matrices())
def test_rank_nullity_over_q(rows):
    A = ExactMatrix(rows)
    N = nullspace(A)
    assert rank(A) + N.ncols == A.ncols
    assert (A @ N).is_zero() if N.ncols else True
    assert rank(A) == oracles.rank(rows)


@given(matrices(), st.sampled_from([2, 3, 5]))
def test_rank_nullity_over_fp(rows, p):
    A = ExactMatrix(rows, field=p)
    N = nullspace(A)
    assert rank(A) + N.ncols == A.ncols
    if N.ncols:
        assert (A @ N).is_zero()


@given(matrices())
def test_nullspace_is_reduced_column_echelon(rows):
    N = nullspace(ExactMatrix(rows))
    leads = []
    for j in range(N.ncols):
        col = N.column(j)
        lead = next(i for i, x in enumerate(col) if x)
        assert col[lead] == 1
        leads.append(lead)
    assert leads == sorted(leads)
    for j, lead in enumerate(leads):
        assert all(N[lead, k] == 0 for k in range(N.ncols) if k != j)


@given(matrices())
def test_deterministic(rows):
    assert nullspace(ExactMatrix(rows)) == nullspace(ExactMatrix([list(r) for r in rows]))
    assert rref(ExactMatrix(rows)) == rref(ExactMatrix(rows))


@given(matrices(), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solve_roundtrip(rows, x):
    A = ExactMatrix(rows)
    b = A.apply(x[:A.ncols])
    sol = solve(A, b)
    assert sol is not None and A.apply(sol) == b


def test_solve_inconsistent():
    A = ExactMatrix([[1, 1], [2, 2]])
    assert solve(A, [1, 3]) is None


def test_stacking():
    A, B = ExactMatrix.identity(2), ExactMatrix([[1, 2, 3]])
    D = block_diag([A, B])
    assert D.shape == (3, 5)
    assert vstack([A, A]).shape == (4, 2)
    assert hstack([A, A]).shape == (2, 4)
    assert D.T.T == D


def test_quotient_space():
    Qs = QuotientSpace(3, [[1, 1, 0]])
    assert Qs.dim == 2
    assert Qs.project([1, 1, 0]) == (0, 0)
    assert Qs.project([1, 0, 0]) == Qs.project([0, -1, 0])
    swap = ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    # modulo e0 + e1 the swap sends e1 to e0 = -e1 and fixes e2
    assert Qs.induced(swap, Qs) == ExactMatrix([[-1, 0], [0, 1]])
