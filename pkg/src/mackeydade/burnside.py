"""Burnside rings, tables of marks and the linearization map to permutation characters.

Permutation characters are stored rationally, as their fixed-point counts on
the conjugacy classes of cyclic subgroups: for a p-group two permutation
characters agree exactly when these marks agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import ExactMatrix, nullspace
from .groups import (FiniteGroup, Subgroup, SubgroupLattice, all_subgroups, conjugate,
                     double_cosets)


class GroupMismatch(ValueError):
    pass


def fixed_points(G: FiniteGroup, K: Subgroup, H: Subgroup) -> int:
    """Number of cosets gH fixed by K, i.e. |{g : g^-1 K g <= H}| / |H|."""
    inv = G.inverse
    conj = G.conj
    hm = H.mask
    count = 0
    for g in G.elements():
        row = conj[inv[g]]
        if all((hm >> row[k]) & 1 for k in K.members):
            count += 1
    return count // H.order


@dataclass(frozen=True)
class MarkTable:
    """``matrix[i][j]`` is the mark of the j-th subgroup class on G/H_i."""

    group: FiniteGroup
    matrix: ExactMatrix

    def mark(self, k_class: int, h_class: int) -> Fraction:
        """m_{[K],[H]} = |(G/H)^K|."""
        return self.matrix[h_class, k_class]


def mark_table(G: FiniteGroup) -> MarkTable:
    if "marks" not in G._cache:
        L = all_subgroups(G)
        reps = [L.rep(c) for c in range(len(L.classes))]
        rows = [[fixed_points(G, K, H) for K in reps] for H in reps]
        G._cache["marks"] = MarkTable(G, ExactMatrix(rows))
    return G._cache["marks"]


@dataclass(frozen=True)
class BurnsideElement:
    """Rational combination of the transitive G-sets [G/H], indexed by subgroup class."""

    group: FiniteGroup
    coords: tuple[Fraction, ...]

    @classmethod
    def basis(cls, G: FiniteGroup, c: int) -> "BurnsideElement":
        n = len(all_subgroups(G).classes)
        return cls(G, tuple(Fraction(int(i == c)) for i in range(n)))

    @classmethod
    def zero(cls, G: FiniteGroup) -> "BurnsideElement":
        return cls(G, (Fraction(0),) * len(all_subgroups(G).classes))

    def _same(self, other: "BurnsideElement") -> None:
        if self.group is not other.group:
            raise GroupMismatch("Burnside elements of different groups")

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._same(other)
        return BurnsideElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._same(other)
        return BurnsideElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, c) -> "BurnsideElement":
        return BurnsideElement(self.group, tuple(Fraction(c) * a for a in self.coords))

    def __mul__(self, other: "BurnsideElement") -> "BurnsideElement":
        return burnside_mult(self, other)

    def marks(self) -> tuple[Fraction, ...]:
        return mark_table(self.group).matrix.T.apply(self.coords)


def _basis_product(G: FiniteGroup, L: SubgroupLattice, a: int, b: int) -> dict[int, int]:
    H, K = L.rep(a), L.rep(b)
    out: dict[int, int] = {}
    for x in double_cosets(G, H, K):
        c = L.class_index(H & conjugate(G, K, x))
        out[c] = out.get(c, 0) + 1
    return out


def burnside_mult(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Product via [G/H][G/K] = sum over x in H\\G/K of [G/(H & xKx^-1)]."""
    a._same(b)
    G = a.group
    L = all_subgroups(G)
    table = G._cache.setdefault("burnside_products", {})
    out = [Fraction(0)] * len(L.classes)
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            if not y:
                continue
            if (i, j) not in table:
                table[(i, j)] = _basis_product(G, L, i, j)
            for c, m in table[(i, j)].items():
                out[c] += m * x * y
    return BurnsideElement(G, tuple(out))


def lin_matrix(G: FiniteGroup) -> ExactMatrix:
    """Linearization QB(G) -> permutation characters: rows are cyclic classes, columns all classes."""
    T = mark_table(G).matrix
    cyc = all_subgroups(G).cyclic_classes()
    return ExactMatrix([[T[h, k] for h in range(T.nrows)] for k in cyc], T.nrows)


def lin_kernel(G: FiniteGroup) -> ExactMatrix:
    """Basis (columns) of the kernel of the linearization map inside QB(G)."""
    return nullspace(lin_matrix(G))


def permutation_character(G: FiniteGroup, H: Subgroup) -> tuple[int, ...]:
    """Marks of G/H on the cyclic subgroup classes of G: the character Ind_H^G 1."""
    L = all_subgroups(G)
    return tuple(fixed_points(G, L.rep(c), H) for c in L.cyclic_classes())
