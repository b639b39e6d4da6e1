"""Rational Dade groups in the basis Ten_R Δ(R), and the Mackey-Dade group of P
modelled as ⊕_{Q in s(P)} QD(N_P(Q)/Q).

Nothing here builds a module in characteristic p: QD(W) is the formal space on
the conjugacy classes of non-cyclic subgroups of W, and restriction is the
Mackey formula on those symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exactla import DimensionError, ExactMatrix, nullspace, vstack
from .groups import (FiniteGroup, Subgroup, SubgroupLattice, all_subgroups, conjugate,
                     double_cosets, is_conjugate, is_cyclic, quotient,
                     subquotient_classes, weyl)


class ClassMismatch(ValueError):
    """An element map does not induce a bijection of non-cyclic subgroup classes."""


class DadeBasis:
    """V-conjugacy classes of non-cyclic subgroups of V, for V a subgroup of W.

    With V = W (the default) this indexes QD(W).
    """

    def __init__(self, W: FiniteGroup, V: Subgroup | None = None):
        self.group = W
        self.lattice: SubgroupLattice = all_subgroups(W)
        self.V = V if V is not None else W.whole
        L = self.lattice
        self.classes = [c for c in L.classes_within(self.V)
                        if not is_cyclic(L.subgroups[c[0]])]
        self.index = {i: k for k, c in enumerate(self.classes) for i in c}

    def __len__(self) -> int:
        return len(self.classes)

    def rep(self, k: int) -> Subgroup:
        return self.lattice.subgroups[self.classes[k][0]]

    def class_index(self, H: Subgroup) -> int:
        return self.index[self.lattice.idx(H)]


def dade_dim(W: FiniteGroup) -> int:
    """Number of conjugacy classes of non-cyclic subgroups of W."""
    return len(all_subgroups(W).noncyclic_classes())


@dataclass(frozen=True)
class DadeVector:
    weyl: FiniteGroup
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != dade_dim(self.weyl):
            raise DimensionError("coordinate count differs from dim QD(W)")


def dade_restrict(W: FiniteGroup, V: Subgroup, source: Subgroup | None = None) -> ExactMatrix:
    """Res^S_V : QD(S) -> QD(V) for V <= S <= W (S defaults to W).

    Res Ten_R Δ(R) = sum over x in V\\S/R with xRx^-1 <= V of Ten_{xRx^-1} Δ(xRx^-1).
    """
    src = DadeBasis(W, source)
    dst = DadeBasis(W, V)
    if not V <= src.V:
        raise ValueError("restriction target is not a subgroup of the source")
    S = src.V
    cols = []
    for k in range(len(src)):
        R = src.rep(k)
        col = [0] * len(dst)
        # a double coset VxR of W lies inside S or misses it
        for x in double_cosets(W, V, R):
            if x not in S:
                continue
            xR = conjugate(W, R, x)
            if xR <= V:
                col[dst.class_index(xR)] += 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(dst))


def dade_transport(src: DadeBasis, dst: DadeBasis, element_map: Callable[[int], int] | dict) -> ExactMatrix:
    """Permutation matrix induced on Ten Δ classes by an isomorphism src.V -> dst.V."""
    phi = element_map.__getitem__ if isinstance(element_map, dict) else element_map
    if len(src) != len(dst):
        raise ClassMismatch(f"{len(src)} classes cannot map onto {len(dst)}")
    rows = [[0] * len(src) for _ in range(len(dst))]
    hit = set()
    for k in range(len(src)):
        img = dst.group.generate(phi(x) for x in src.rep(k).members)
        if img.order != src.rep(k).order or dst.lattice.idx(img) not in dst.index:
            raise ClassMismatch(f"class {k} has no matching image class")
        j = dst.class_index(img)
        rows[j][k] = 1
        hit.add(j)
    if len(hit) != len(dst):
        raise ClassMismatch("element map is not a bijection on classes")
    return ExactMatrix(rows, len(src))


# --------------------------------------------------------------------------
# the Mackey-Dade group of P


@dataclass(frozen=True)
class MackeyDadeVector:
    """One DadeVector per subgroup class representative Q of P, over W_P(Q)."""

    group: FiniteGroup
    blocks: tuple[DadeVector, ...]

    @classmethod
    def from_flat(cls, P: FiniteGroup, v: Sequence) -> "MackeyDadeVector":
        blocks, o = [], 0
        for W in dmu_weyls(P):
            d = dade_dim(W.group)
            blocks.append(DadeVector(W.group, tuple(Fraction(x) for x in v[o:o + d])))
            o += d
        return cls(P, tuple(blocks))

    def support(self) -> list[tuple[int, int]]:
        return [(b, k) for b, blk in enumerate(self.blocks) for k, x in enumerate(blk.coords) if x]


def rho(P: FiniteGroup, blocks: Sequence[DadeVector]) -> MackeyDadeVector:
    """Assemble per-class Dade data into an element of QD_μ(P)."""
    ws = dmu_weyls(P)
    if len(blocks) != len(ws) or any(b.weyl is not W.group for b, W in zip(blocks, ws)):
        raise ValueError("blocks do not match the Weyl groups of s(P)")
    return MackeyDadeVector(P, tuple(blocks))


def dmu_weyls(P: FiniteGroup):
    L = all_subgroups(P)
    return [weyl(P, L.rep(c)) for c in range(len(L.classes))]


def dmu_offsets(P: FiniteGroup) -> list[int]:
    out, o = [], 0
    for W in dmu_weyls(P):
        out.append(o)
        o += dade_dim(W.group)
    return out


def dmu_dim(P: FiniteGroup) -> int:
    """dim QD_μ(P) = sum over Q in s(P) of dim QD(W_P(Q)).

    Cross-checked against the number of non-cyclic subquotient classes.
    """
    total = sum(dade_dim(W.group) for W in dmu_weyls(P))
    nc = len(subquotient_classes(P).noncyclic_classes())
    if total != nc:
        raise AssertionError(f"{P.name}: block sum {total} != non-cyclic subquotient classes {nc}")
    return total


def jef_res_map(P: FiniteGroup, R: Subgroup, N: Subgroup) -> ExactMatrix:
    """Jef^R_{R/N} ∘ Res^P_R on the block model of QD_μ.

    Target block S/N (S/N a class representative in R/N) receives source block
    Q, where S = gQg^-1: transport along g, restrict W_P(S) to N_R(S)/S, and
    identify the latter with the Weyl group of S/N in R/N.
    """
    cache = P._cache.setdefault("jef_res", {})
    key = (R.mask, N.mask)
    if key in cache:
        return cache[key]
    L = all_subgroups(P)
    src_ws = dmu_weyls(P)
    src_off = dmu_offsets(P)
    block_of = {L.class_of[L.idx(W.kernel)]: b for b, W in enumerate(src_ws)}
    src_dim = src_off[-1] + dade_dim(src_ws[-1].group)

    RN = quotient(P, N, R)
    Rbar = RN.group
    tgt_ws = dmu_weyls(Rbar)
    rows: list[list] = []
    for W3 in tgt_ws:
        S = RN.preimage(W3.kernel)
        b = block_of[L.class_index(S)]
        W1 = src_ws[b]
        Q = W1.kernel
        g = is_conjugate(P, Q, S)
        W2 = weyl(P, S)
        B1 = DadeBasis(W1.group)
        B2 = DadeBasis(W2.group)
        t, gi = P.table, P.inverse[g]
        T1 = dade_transport(B1, B2, lambda w: W2.project[t[t[g][W1.section[w]]][gi]])
        V = W2.image(W2.top & R)
        Res = dade_restrict(W2.group, V)
        BV = DadeBasis(W2.group, V)
        B3 = DadeBasis(W3.group)
        T2 = dade_transport(BV, B3, lambda v: W3.project[RN.project[W2.section[v]]])
        block = T2 @ Res @ T1
        for r in block.rows:
            row = [0] * src_dim
            row[src_off[b]:src_off[b] + len(B1)] = r
            rows.append(row)
    M = ExactMatrix(rows, src_dim)
    cache[key] = M
    return M


def underline_dmu(P: FiniteGroup) -> ExactMatrix:
    """Basis (columns) of the intersection of ker(Jef ∘ Res) over subquotients (R, N) != (P, 1)."""
    SQ = subquotient_classes(P)
    top = SQ.class_of(P.whole, P.trivial)
    n = dmu_dim(P)
    maps = [jef_res_map(P, SQ.rep(c).big, SQ.rep(c).small) for c in range(len(SQ)) if c != top]
    maps = [M for M in maps if M.nrows]
    if not maps:
        return ExactMatrix.identity(n)
    return nullspace(vstack(maps))


def delta_position(P: FiniteGroup) -> int | None:
    """Flat index of Δ(P) (block Q = 1, class of P itself), None for cyclic P."""
    W = dmu_weyls(P)[0]
    B = DadeBasis(W.group)
    if len(B) == 0:
        return None
    return dmu_offsets(P)[0] + B.class_index(W.group.whole)
