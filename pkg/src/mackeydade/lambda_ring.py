"""The ring of subquotients, the isomorphism onto sums of Burnside rings of Weyl
groups, and the two constructions of the Mackey linearization map.

Bases:

* QΛ(P): subquotient classes ``[Q, N]_P`` in :class:`SubquotientClasses` order.
* ⊕_R QB(W_P(R)): for each subgroup class representative R of P in lattice
  order, the subgroup classes of W_P(R) = N_P(R)/R.
* ⊕_R QR(W_P(R)): the same blocks, restricted to cyclic subgroup classes of
  each W_P(R) (characters as cyclic marks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .burnside import BurnsideElement, GroupMismatch, fixed_points, lin_matrix
from .exactla import ExactMatrix, block_diag, nullspace
from .groups import (FiniteGroup, QuotientGroup, Subgroup, all_subgroups, conjugate,
                     double_cosets, is_conjugate, subquotient_classes, weyl)


@dataclass(frozen=True)
class LambdaElement:
    group: FiniteGroup
    coords: tuple[Fraction, ...]

    @classmethod
    def basis(cls, P: FiniteGroup, c: int) -> "LambdaElement":
        n = len(subquotient_classes(P))
        return cls(P, tuple(Fraction(int(i == c)) for i in range(n)))

    @classmethod
    def unit(cls, P: FiniteGroup) -> "LambdaElement":
        SQ = subquotient_classes(P)
        return cls.basis(P, SQ.class_of(P.whole, P.trivial))

    def _same(self, other: "LambdaElement") -> None:
        if self.group is not other.group:
            raise GroupMismatch("Λ elements of different groups")

    def __add__(self, other: "LambdaElement") -> "LambdaElement":
        self._same(other)
        return LambdaElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LambdaElement") -> "LambdaElement":
        self._same(other)
        return LambdaElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, c) -> "LambdaElement":
        return LambdaElement(self.group, tuple(Fraction(c) * a for a in self.coords))

    def __mul__(self, other: "LambdaElement") -> "LambdaElement":
        return lambda_mult(self, other)


def _basis_product(P: FiniteGroup, a: int, b: int) -> dict[int, int]:
    SQ = subquotient_classes(P)
    R, N = SQ.rep(a).big, SQ.rep(a).small
    S, M = SQ.rep(b).big, SQ.rep(b).small
    out: dict[int, int] = {}
    for x in double_cosets(P, R, S):
        xM = conjugate(P, M, x)
        xS = conjugate(P, S, x)
        # xM and N are both normal in R & xS, so their join is their product
        if xM <= R and N <= xS:
            c = SQ.class_of(R & xS, xM.join(N))
            out[c] = out.get(c, 0) + 1
    return out


def lambda_mult(a: LambdaElement, b: LambdaElement) -> LambdaElement:
    a._same(b)
    P = a.group
    table = P._cache.setdefault("lambda_products", {})
    out = [Fraction(0)] * len(a.coords)
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            if not y:
                continue
            if (i, j) not in table:
                table[(i, j)] = _basis_product(P, i, j)
            for c, m in table[(i, j)].items():
                out[c] += m * x * y
    return LambdaElement(P, tuple(out))


def burnside_embed(x: BurnsideElement) -> LambdaElement:
    """[P/R] -> [R, 1]_P."""
    P = x.group
    L = all_subgroups(P)
    SQ = subquotient_classes(P)
    out = [Fraction(0)] * len(SQ)
    for c, v in enumerate(x.coords):
        out[SQ.class_of(L.rep(c), P.trivial)] += v
    return LambdaElement(P, tuple(out))


# --------------------------------------------------------------------------
# block layout over s(P)


@dataclass(frozen=True)
class BlockLayout:
    """One block per subgroup class representative R of P, each over W_P(R)."""

    group: FiniteGroup
    reps: tuple[Subgroup, ...]
    weyls: tuple[QuotientGroup, ...]
    sizes: tuple[int, ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        out, o = [], 0
        for s in self.sizes:
            out.append(o)
            o += s
        return tuple(out)

    @property
    def dim(self) -> int:
        return sum(self.sizes)

    def split(self, v: Sequence) -> list[tuple]:
        return [tuple(v[o:o + s]) for o, s in zip(self.offsets, self.sizes)]


def _layout(P: FiniteGroup, kind: str) -> BlockLayout:
    key = ("layout", kind)
    if key not in P._cache:
        L = all_subgroups(P)
        reps = tuple(L.rep(c) for c in range(len(L.classes)))
        weyls = tuple(weyl(P, R) for R in reps)
        if kind == "burnside":
            sizes = tuple(len(all_subgroups(W.group).classes) for W in weyls)
        elif kind == "character":
            sizes = tuple(len(all_subgroups(W.group).cyclic_classes()) for W in weyls)
        else:
            sizes = tuple(len(all_subgroups(W.group).noncyclic_classes()) for W in weyls)
        P._cache[key] = BlockLayout(P, reps, weyls, sizes)
    return P._cache[key]


def burnside_layout(P: FiniteGroup) -> BlockLayout:
    return _layout(P, "burnside")


def character_layout(P: FiniteGroup) -> BlockLayout:
    return _layout(P, "character")


@dataclass(frozen=True)
class BurnsideSumVector:
    """An element of ⊕_{R in s(P)} QB(W_P(R))."""

    group: FiniteGroup
    blocks: tuple[BurnsideElement, ...]

    @classmethod
    def from_flat(cls, P: FiniteGroup, v: Sequence) -> "BurnsideSumVector":
        lay = burnside_layout(P)
        return cls(P, tuple(BurnsideElement(W.group, tuple(Fraction(x) for x in b))
                            for W, b in zip(lay.weyls, lay.split(v))))


@dataclass(frozen=True)
class GrothendieckVector:
    """An element of ⊕_{R in s(P)} QR(W_P(R)), each block a cyclic-mark vector.

    This models QR_μ(P) through the bar construction: the vector supported in
    block R with value m stands for the functor Y_{R,m}.
    """

    group: FiniteGroup
    blocks: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_flat(cls, P: FiniteGroup, v: Sequence) -> "GrothendieckVector":
        return cls(P, tuple(tuple(Fraction(x) for x in b) for b in character_layout(P).split(v)))


# --------------------------------------------------------------------------
# alpha_P and the bijection SQ_P(P) <-> SS_P(P)


def alpha(P: FiniteGroup) -> ExactMatrix:
    """Matrix of α_P : QΛ(P) -> ⊕_R QB(W_P(R)).

    Column [Q, N] has, in block R, one copy of the transitive W_P(R)-set with
    stabilizer N_{g^-1 Q g}(R)/R for every g in Q\\P/N_P(R) with N <= gRg^-1 <= Q.
    """
    if "alpha" in P._cache:
        return P._cache["alpha"]
    SQ = subquotient_classes(P)
    lay = burnside_layout(P)
    cols = []
    for c in range(len(SQ)):
        Q, N = SQ.rep(c).big, SQ.rep(c).small
        col = [0] * lay.dim
        for R, W, off in zip(lay.reps, lay.weyls, lay.offsets):
            NR = W.top
            WL = all_subgroups(W.group)
            for g in double_cosets(P, Q, NR):
                gR = conjugate(P, R, g)
                if N <= gR <= Q:
                    stab = NR & conjugate(P, Q, P.inverse[g])
                    col[off + WL.class_index(W.image(stab))] += 1
        cols.append(col)
    P._cache["alpha"] = ExactMatrix.from_columns(cols, lay.dim)
    return P._cache["alpha"]


@dataclass(frozen=True)
class SQSSBijection:
    """f : SQ_P(P) -> SS_P(P) and its inverse, as index lists.

    An element of SS_P(P) is a pair (block, class) where block indexes s(P)
    and class indexes subgroup classes of the corresponding Weyl group.
    """

    f: tuple[tuple[int, int], ...]
    f_inv: dict[tuple[int, int], int]
    ss_elements: tuple[tuple[int, int], ...]

    def roundtrip_sq(self) -> bool:
        return all(self.f_inv[self.f[c]] == c for c in range(len(self.f)))

    def roundtrip_ss(self) -> bool:
        return all(self.f[self.f_inv[s]] == s for s in self.ss_elements)


def sq_ss_bijection(P: FiniteGroup) -> SQSSBijection:
    SQ = subquotient_classes(P)
    L = SQ.lattice
    lay = burnside_layout(P)
    block_of = {L.class_of[L.idx(R)]: b for b, R in enumerate(lay.reps)}

    f = []
    for c in range(len(SQ)):
        Q, N = SQ.rep(c).big, SQ.rep(c).small
        b = block_of[L.class_index(N)]
        R, W = lay.reps[b], lay.weyls[b]
        x = is_conjugate(P, N, R)
        xQ = conjugate(P, Q, x)
        f.append((b, all_subgroups(W.group).class_index(W.image(xQ))))

    ss = []
    f_inv = {}
    for b, (R, W) in enumerate(zip(lay.reps, lay.weyls)):
        WL = all_subgroups(W.group)
        for t in range(len(WL.classes)):
            T = W.preimage(WL.rep(t))
            ss.append((b, t))
            f_inv[(b, t)] = SQ.class_of(T, R)
    return SQSSBijection(tuple(f), f_inv, tuple(ss))


# --------------------------------------------------------------------------
# linearization


def lin_sum(P: FiniteGroup) -> ExactMatrix:
    """Block diagonal sum of the linearization maps of the Weyl groups W_P(R)."""
    lay = burnside_layout(P)
    return block_diag([lin_matrix(W.group) for W in lay.weyls])


def lin_mu_via_alpha(P: FiniteGroup) -> ExactMatrix:
    """Lin^⊕ ∘ α_P, the Q-th block of each column summed over double cosets."""
    return lin_sum(P) @ alpha(P)


def lin_mu_direct(P: FiniteGroup) -> ExactMatrix:
    """Bar of Lin^μ([R, N]_P) read off from its decomposition into Y-functors.

    Block Q of column [R, N] sums, over R-conjugacy classes of subgroups K
    with N <= K <= R and K = gQg^-1, the permutation character of W_P(Q) on
    the cosets of N_{g^-1 R g}(Q)/Q.
    """
    if "lin_mu_direct" in P._cache:
        return P._cache["lin_mu_direct"]
    SQ = subquotient_classes(P)
    L = SQ.lattice
    lay = character_layout(P)
    block_of = {L.class_of[L.idx(Q)]: b for b, Q in enumerate(lay.reps)}
    cols = []
    for c in range(len(SQ)):
        R, N = SQ.rep(c).big, SQ.rep(c).small
        col = [0] * lay.dim
        between = [i for i in L.below(L.idx(R)) if N <= L.subgroups[i]]
        done: set[int] = set()
        for i in between:
            if i in done:
                continue
            done.update(L.conj_idx[r][i] for r in R.members)
            K = L.subgroups[i]
            b = block_of[L.class_of[i]]
            Q, W, off = lay.reps[b], lay.weyls[b], lay.offsets[b]
            g = is_conjugate(P, Q, K)
            stab = W.top & conjugate(P, R, P.inverse[g])
            WG = W.group
            WL = all_subgroups(WG)
            T = W.image(stab)
            for k, cc in enumerate(WL.cyclic_classes()):
                col[off + k] += fixed_points(WG, WL.rep(cc), T)
        cols.append(col)
    P._cache["lin_mu_direct"] = ExactMatrix.from_columns(cols, lay.dim)
    return P._cache["lin_mu_direct"]


def lin_mu(P: FiniteGroup) -> ExactMatrix:
    return lin_mu_direct(P)


def lin_mu_kernel(P: FiniteGroup) -> ExactMatrix:
    """Basis (columns) of ker QLin^μ_P inside QΛ(P); its dimension is dim QD_μ(P)."""
    return nullspace(lin_mu_direct(P))
