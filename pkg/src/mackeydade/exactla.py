"""Exact matrices over Q and over prime fields F_p.

Rank over Q uses fraction-free (Bareiss) elimination on an integer-scaled
copy; F_p uses ordinary elimination with modular inverses.  Pivots are always
the first nonzero entry scanning down the current column, so every result is
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Field = int | None  # None = Q, p = F_p


class DimensionError(ValueError):
    pass


def _norm(x, field: Field):
    if field is None:
        return x if isinstance(x, Fraction) else Fraction(x)
    if isinstance(x, Fraction):
        if x.denominator % field == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{field}")
        return x.numerator * pow(x.denominator, -1, field) % field
    return int(x) % field


class ExactMatrix:
    """Immutable rectangular matrix with canonical exact entries."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None, field: Field = None):
        rows = tuple(tuple(_norm(x, field) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("need ncols for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    # construction ---------------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int, field: Field = None) -> "ExactMatrix":
        return cls([[0] * n for _ in range(m)], n, field)

    @classmethod
    def identity(cls, n: int, field: Field = None) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, field)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int, field: Field = None) -> "ExactMatrix":
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols), field)

    # basic protocol -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and self.shape == other.shape
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols, self.field))

    def __repr__(self) -> str:
        f = "Q" if self.field is None else f"F{self.field}"
        return f"ExactMatrix({self.nrows}x{self.ncols}/{f}, {[[str(x) for x in r] for r in self.rows]})"

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.columns, self.nrows, self.field)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def _check(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise DimensionError("field mismatch")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.ncols, self.field)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self.rows], self.ncols, self.field)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = _norm(c, self.field)
        return ExactMatrix([[c * a for a in r] for r in self.rows], self.ncols, self.field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return multiply(self, other)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError("vector length mismatch")
        v = [_norm(x, self.field) for x in v]
        out = [sum(a * b for a, b in zip(r, v) if a and b) for r in self.rows]
        return tuple(_norm(x, self.field) for x in out)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionError("trace of a non-square matrix")
        return _norm(sum(self.rows[i][i] for i in range(self.nrows)), self.field)

    def to_strings(self) -> list[list[str]]:
        return [[_fmt(x) for x in r] for r in self.rows]


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def multiply(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    A._check(B)
    if A.ncols != B.nrows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    bcols = B.columns
    rows = []
    for r in A.rows:
        nz = [(k, a) for k, a in enumerate(r) if a]
        rows.append([sum(a * c[k] for k, a in nz) for c in bcols])
    return ExactMatrix(rows, B.ncols, A.field)


def vstack(mats: Sequence[ExactMatrix], ncols: int | None = None, field: Field = None) -> ExactMatrix:
    if mats:
        ncols, field = mats[0].ncols, mats[0].field
    if any(M.ncols != ncols or M.field != field for M in mats):
        raise DimensionError("vstack needs equal column counts")
    return ExactMatrix([r for M in mats for r in M.rows], ncols, field)


def hstack(mats: Sequence[ExactMatrix], nrows: int | None = None, field: Field = None) -> ExactMatrix:
    if mats:
        nrows, field = mats[0].nrows, mats[0].field
    if any(M.nrows != nrows for M in mats):
        raise DimensionError("hstack needs equal row counts")
    return ExactMatrix([[x for M in mats for x in M.rows[i]] for i in range(nrows)],
                       sum(M.ncols for M in mats), field)


def block_diag(mats: Sequence[ExactMatrix], field: Field = None) -> ExactMatrix:
    n = sum(M.ncols for M in mats)
    rows = []
    off = 0
    for M in mats:
        for r in M.rows:
            rows.append([0] * off + list(r) + [0] * (n - off - M.ncols))
        off += M.ncols
    return ExactMatrix(rows, n, mats[0].field if mats else field)


# --------------------------------------------------------------------------
# elimination


def _integer_rows(M: ExactMatrix) -> list[list[int]]:
    out = []
    for r in M.rows:
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def bareiss_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix; returns (rows, pivot columns)."""
    M = [list(r) for r in rows]
    m = len(M)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        prow = M[r]
        for i in range(r + 1, m):
            row = M[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - a * prow[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def _rref_fp(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    M = [list(r) for r in rows]
    m = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        k = next((i for i in range(r, m) if M[i][c] % p), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                a = M[i][c]
                M[i] = [(x - a * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rref_q(M: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    ech, pivots = bareiss_echelon(_integer_rows(M), M.ncols)
    rows = [[Fraction(x) for x in ech[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        a = rows[i][c]
        rows[i] = [x / a for x in rows[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            a = rows[k][c]
            if a:
                rows[k] = [x - a * y for x, y in zip(rows[k], rows[i])]
    return rows, pivots


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns."""
    if M.field is None:
        rows, piv = _rref_q(M)
    else:
        rows, piv = _rref_fp([list(r) for r in M.rows], M.ncols, M.field)
    return ExactMatrix(rows, M.ncols, M.field), piv


def rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.field is None:
        return len(bareiss_echelon(_integer_rows(M), M.ncols)[1])
    return len(_rref_fp([list(r) for r in M.rows], M.ncols, M.field)[1])


def nullspace(M: ExactMatrix) -> ExactMatrix:
    """Basis of {v : M v = 0} as the columns of a matrix, in reduced column echelon form.

    Over Q the first nonzero entry of every basis vector is 1.
    """
    n = M.ncols
    if M.nrows == 0:
        return ExactMatrix.identity(n, M.field)
    R, piv = rref(M)
    free = [j for j in range(n) if j not in piv]
    vecs = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = -R.rows[i][f]
        vecs.append(v)
    if not vecs:
        return ExactMatrix([[] for _ in range(n)], 0, M.field)
    B, _ = rref(ExactMatrix(vecs, n, M.field))
    return B.T


def solve(A: ExactMatrix, b: Sequence) -> tuple | None:
    """One solution x of A x = b (free variables set to 0), or None."""
    if len(b) != A.nrows:
        raise DimensionError("right-hand side length mismatch")
    aug = ExactMatrix([list(r) + [x] for r, x in zip(A.rows, b)], A.ncols + 1, A.field)
    R, piv = rref(aug)
    if A.ncols in piv:
        return None
    x = [_norm(0, A.field)] * A.ncols
    for i, c in enumerate(piv):
        x[c] = R.rows[i][A.ncols]
    return tuple(x)


def span_rank(vectors: Sequence[Sequence], length: int, field: Field = None) -> int:
    if not vectors:
        return 0
    return rank(ExactMatrix(vectors, length, field))


class QuotientSpace:
    """``k^n / span(gens)`` with coordinates on the non-pivot standard basis vectors."""

    def __init__(self, n: int, gens: Sequence[Sequence], field: Field = None):
        self.n = n
        self.field = field
        if gens:
            R, piv = rref(ExactMatrix(gens, n, field))
            self._rows, self._piv = R.rows, piv
        else:
            self._rows, self._piv = (), []
        self.basis = [j for j in range(n) if j not in self._piv]
        self.dim = len(self.basis)

    def project(self, v: Sequence) -> tuple:
        v = [_norm(x, self.field) for x in v]
        for row, c in zip(self._rows, self._piv):
            a = v[c]
            if a:
                v = [_norm(x - a * y, self.field) for x, y in zip(v, row)]
        return tuple(v[j] for j in self.basis)

    def lift(self, j: int) -> list:
        v = [0] * self.n
        v[self.basis[j]] = 1
        return v

    def induced(self, M: ExactMatrix, target: "QuotientSpace") -> ExactMatrix:
        """Matrix of the map self -> target induced by M (M must preserve the subspaces)."""
        cols = [target.project(M.apply(self.lift(j))) for j in range(self.dim)]
        return ExactMatrix.from_columns(cols, target.dim, self.field)
