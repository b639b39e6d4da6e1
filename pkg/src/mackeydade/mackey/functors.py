"""Explicit Mackey functors as evaluation spaces plus restriction, transfer and
conjugation matrices, with the bar construction and the twin-dual.

A :class:`MackeyFunctorData` stores only generator maps: r and t for maximal
pairs K < H and c^g for a generating set of the group.  All other maps are
composites; :func:`check_relations` verifies that the composites are
well defined and satisfy the relations of the Mackey algebra.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from ..exactla import ExactMatrix, QuotientSpace, hstack, nullspace, rank, vstack
from ..groups import (FiniteGroup, QuotientGroup, Subgroup, SubgroupLattice, all_subgroups,
                      double_cosets, generators, is_normal, normalizer)

Field = int | None


def field_of(G: FiniteGroup, tag) -> Field:
    """Map 'Q' / 'Fp' (or None / p) to the internal field tag."""
    if tag in (None, "Q", "q"):
        return None
    if tag in ("Fp", "fp", "F_p"):
        return G.prime if G.prime is not None else 2
    return int(tag)


class MackeyFunctorData:
    """A Mackey functor for the subgroup ``top`` of ``group`` (default: all of it)."""

    def __init__(self, group: FiniteGroup, field: Field, dims: dict[int, int],
                 rmaps: dict[tuple[int, int], ExactMatrix],
                 tmaps: dict[tuple[int, int], ExactMatrix],
                 cmaps: dict[tuple[int, int], ExactMatrix],
                 top: Subgroup | None = None, name: str = "M"):
        self.group = group
        self.field = field
        self.lattice: SubgroupLattice = all_subgroups(group)
        self.top = top if top is not None else group.whole
        self.name = name
        L = self.lattice
        self.subs = L.below(L.idx(self.top))
        self.dims = dims
        self.rmaps = rmaps
        self.tmaps = tmaps
        self.cmaps = cmaps
        self.gens = generators(self.top)
        self._words = self._generator_words()
        self._cache: dict = {}

    def _generator_words(self) -> dict[int, tuple[int, int]]:
        """BFS tree over ``top``: element -> (generator, predecessor)."""
        t = self.group.table
        parent = {0: None}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in self.gens:
                y = t[s][x]
                if y not in parent:
                    parent[y] = (s, x)
                    queue.append(y)
        return parent

    def maximal(self, h: int) -> list[int]:
        return self.lattice.maximal_subgroups(h)

    def identity(self, h: int) -> ExactMatrix:
        return ExactMatrix.identity(self.dims[h], self.field)

    def res(self, h: int, k: int) -> ExactMatrix:
        """r^H_K, composed along the chain through least-index maximal subgroups."""
        if h == k:
            return self.identity(h)
        key = ("r", h, k)
        if key not in self._cache:
            m = next(m for m in self.maximal(h) if self.lattice.contains(k, m))
            self._cache[key] = self.res(m, k) @ self.rmaps[(h, m)]
        return self._cache[key]

    def tr(self, h: int, k: int) -> ExactMatrix:
        if h == k:
            return self.identity(h)
        key = ("t", h, k)
        if key not in self._cache:
            m = next(m for m in self.maximal(h) if self.lattice.contains(k, m))
            self._cache[key] = self.tmaps[(h, m)] @ self.tr(m, k)
        return self._cache[key]

    def conj(self, g: int, h: int) -> ExactMatrix:
        """c^g : M(H) -> M(gHg^-1) for g in ``top``."""
        if g == 0:
            return self.identity(h)
        key = ("c", g, h)
        if key not in self._cache:
            s, x = self._words[g]
            xh = self.lattice.conj_idx[x][h]
            self._cache[key] = self.cmaps[(s, xh)] @ self.conj(x, h)
        return self._cache[key]


# --------------------------------------------------------------------------
# relation checks


@dataclass
class RelationReport:
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)

    def record(self, family: str, ok: bool, witness) -> None:
        self.checked[family] = self.checked.get(family, 0) + 1
        if not ok:
            self.failures.setdefault(family, []).append(witness)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_relations(M: MackeyFunctorData, rng: random.Random | None = None,
                    conjugators: int | None = None) -> RelationReport:
    """Check the Mackey functor axioms on all subgroup chains of M.top.

    Families: ``triviality`` (H acts trivially on M(H)), ``transitivity`` of
    r, t and c, ``naturality`` of conjugation past r and t, and the
    ``mackey`` formula.  Conjugators for naturality are all elements of
    ``top``, or a random sample of size ``conjugators`` when given.  The unit
    decomposition and the vanishing of non-composable products hold for any
    family of maps indexed by subgroups and are recorded as ``structural``.
    """
    G, L = M.group, M.lattice
    t = G.table
    rep = RelationReport()
    subs = M.subs
    elems = list(M.top.members)
    if conjugators is not None and conjugators < len(elems):
        elems = (rng or random.Random(0)).sample(elems, conjugators)

    # chain independence for r and t, and conjugation is a homomorphism
    for h in subs:
        for k in L.below(h):
            if k == h:
                continue
            for m in M.maximal(h):
                if L.contains(k, m):
                    rep.record("transitivity:r", M.res(m, k) @ M.rmaps[(h, m)] == M.res(h, k), (h, m, k))
                    rep.record("transitivity:t", M.tmaps[(h, m)] @ M.tr(m, k) == M.tr(h, k), (h, m, k))
    for g in M.top.members:
        for s in M.gens:
            for h in subs:
                gh = L.conj_idx[g][h]
                rep.record("transitivity:c", M.conj(t[s][g], h) == M.conj(s, gh) @ M.conj(g, h), (s, g, h))
    # elements of H act trivially on M(H)
    for h in subs:
        for x in L.subgroups[h].members:
            rep.record("triviality", M.conj(x, h) == M.identity(h), (x, h))
    # conjugation commutes past r and t
    for g in elems:
        for h in subs:
            gh = L.conj_idx[g][h]
            for k in L.below(h):
                gk = L.conj_idx[g][k]
                rep.record("naturality:r", M.conj(g, k) @ M.res(h, k) == M.res(gh, gk) @ M.conj(g, h), (g, h, k))
                rep.record("naturality:t", M.conj(g, h) @ M.tr(h, k) == M.tr(gh, gk) @ M.conj(g, k), (g, h, k))
    inv = G.inverse
    for h in subs:
        H = L.subgroups[h]
        below = L.below(h)
        for j in below:
            J = L.subgroups[j]
            for k in below:
                K = L.subgroups[k]
                lhs = M.res(h, j) @ M.tr(h, k)
                rhs = ExactMatrix.zeros(M.dims[j], M.dims[k], M.field)
                for x in double_cosets(G, J, K):
                    if x not in H:
                        continue
                    low = L.index[L.subgroups[L.conj_idx[inv[x]][j]].mask & K.mask]
                    up = L.conj_idx[x][low]
                    rhs = rhs + M.tr(j, up) @ M.conj(x, low) @ M.res(k, low)
                rep.record("mackey", lhs == rhs, (h, j, k))
    rep.checked["structural"] = 1
    return rep


# --------------------------------------------------------------------------
# concrete functors


def _class_position(L: SubgroupLattice, V: Subgroup) -> tuple[list[int], dict[int, int]]:
    classes = L.classes_within(V)
    pos = {i: n for n, c in enumerate(classes) for i in c}
    return [c[0] for c in classes], pos


def burnside_functor(G: FiniteGroup, field="Q") -> MackeyFunctorData:
    """H -> k B(H), basis the H-sets [H/L] for L up to H-conjugacy."""
    F = field_of(G, field)
    L = all_subgroups(G)
    data = {h: _class_position(L, L.subgroups[h]) for h in range(len(L))}
    dims = {h: len(data[h][0]) for h in range(len(L))}
    rmaps, tmaps, cmaps = {}, {}, {}
    for h in range(len(L)):
        H = L.subgroups[h]
        reps_h, pos_h = data[h]
        for k in L.maximal_subgroups(h):
            K = L.subgroups[k]
            reps_k, pos_k = data[k]
            R = [[0] * dims[h] for _ in range(dims[k])]
            for col, l in enumerate(reps_h):
                Lsub = L.subgroups[l]
                for x in double_cosets(G, K, Lsub):
                    if x not in H:
                        continue
                    meet = L.index[K.mask & L.subgroups[L.conj_idx[x][l]].mask]
                    R[pos_k[meet]][col] += 1
            rmaps[(h, k)] = ExactMatrix(R, dims[h], F)
            T = [[0] * dims[k] for _ in range(dims[h])]
            for col, l in enumerate(reps_k):
                T[pos_h[l]][col] += 1
            tmaps[(h, k)] = ExactMatrix(T, dims[k], F)
    for g in generators(G.whole):
        for h in range(len(L)):
            gh = L.conj_idx[g][h]
            reps_h, _ = data[h]
            _, pos_gh = data[gh]
            C = [[0] * dims[h] for _ in range(dims[gh])]
            for col, l in enumerate(reps_h):
                C[pos_gh[L.conj_idx[g][l]]][col] = 1
            cmaps[(g, h)] = ExactMatrix(C, dims[h], F)
    return MackeyFunctorData(G, F, dims, rmaps, tmaps, cmaps, name="B")


def fixed_point_functor(G: FiniteGroup, field="Q") -> MackeyFunctorData:
    """Every evaluation k; r = 1, t^H_K = |H:K|, c = 1."""
    F = field_of(G, field)
    L = all_subgroups(G)
    one = ExactMatrix([[1]], 1, F)
    dims = {h: 1 for h in range(len(L))}
    rmaps, tmaps = {}, {}
    for h in range(len(L)):
        for k in L.maximal_subgroups(h):
            rmaps[(h, k)] = one
            tmaps[(h, k)] = ExactMatrix([[L.subgroups[h].order // L.subgroups[k].order]], 1, F)
    cmaps = {(g, h): one for g in generators(G.whole) for h in range(len(L))}
    return MackeyFunctorData(G, F, dims, rmaps, tmaps, cmaps, name="FP")


def coset_action(G: FiniteGroup, S: Subgroup) -> list[list[int]]:
    """``act[g][x]``: left multiplication on the cosets of S, numbered by least element."""
    t = G.table
    label: dict[int, int] = {}
    reps = []
    for g in G.elements():
        if g in label:
            continue
        for s in S.members:
            label[t[g][s]] = len(reps)
        reps.append(g)
    return [[label[t[g][r]] for r in reps] for g in G.elements()]


def permutation_functor(G: FiniteGroup, S: Subgroup, field="Q") -> MackeyFunctorData:
    """H -> k[G/S]^H in the basis of H-orbit sums; r is inclusion, t the relative trace."""
    F = field_of(G, field)
    L = all_subgroups(G)
    act = coset_action(G, S)
    n = len(act[0])

    def orbits(h: int) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for x in range(n):
            if x not in seen:
                orb = tuple(sorted({act[y][x] for y in L.subgroups[h].members}))
                seen.update(orb)
                out.append(orb)
        return out

    orbs = {h: orbits(h) for h in range(len(L))}
    where = {h: {x: i for i, o in enumerate(orbs[h]) for x in o} for h in orbs}
    dims = {h: len(o) for h, o in orbs.items()}
    rmaps, tmaps, cmaps = {}, {}, {}
    for h in range(len(L)):
        for k in L.maximal_subgroups(h):
            R = [[0] * dims[h] for _ in range(dims[k])]
            T = [[0] * dims[k] for _ in range(dims[h])]
            for i, o in enumerate(orbs[h]):
                for x in o:
                    R[where[k][x]][i] = 1
            index = L.subgroups[h].order // L.subgroups[k].order
            for j, o in enumerate(orbs[k]):
                big = orbs[h][where[h][o[0]]]
                T[where[h][o[0]]][j] = index * len(o) // len(big)
            rmaps[(h, k)] = ExactMatrix(R, dims[h], F)
            tmaps[(h, k)] = ExactMatrix(T, dims[k], F)
    for g in generators(G.whole):
        for h in range(len(L)):
            gh = L.conj_idx[g][h]
            C = [[0] * dims[h] for _ in range(dims[gh])]
            for i, o in enumerate(orbs[h]):
                C[where[gh][act[g][o[0]]]][i] = 1
            cmaps[(g, h)] = ExactMatrix(C, dims[h], F)
    return MackeyFunctorData(G, F, dims, rmaps, tmaps, cmaps, name=f"FP[G/{S.order}]")


def restrict(M: MackeyFunctorData, K: Subgroup) -> MackeyFunctorData:
    """Res_K M: same evaluations on subgroups of K, conjugations by a generating set of K."""
    if not K <= M.top:
        raise ValueError("restriction to a subgroup outside the functor's group")
    L = M.lattice
    subs = L.below(L.idx(K))
    rmaps = {(h, m): M.rmaps[(h, m)] for h in subs for m in L.maximal_subgroups(h)}
    tmaps = {(h, m): M.tmaps[(h, m)] for h in subs for m in L.maximal_subgroups(h)}
    cmaps = {(g, h): M.conj(g, h) for g in generators(K) for h in subs}
    return MackeyFunctorData(M.group, M.field, {h: M.dims[h] for h in subs}, rmaps, tmaps,
                             cmaps, top=K, name=f"Res({M.name})")


# --------------------------------------------------------------------------
# bar construction


@dataclass
class BarModule:
    """M-bar(H) = M(H) / sum of transfers from proper subgroups, with its Weyl group action."""

    functor: MackeyFunctorData
    subgroup: int
    space: QuotientSpace
    weyl: QuotientGroup

    @property
    def dim(self) -> int:
        return self.space.dim

    def action(self, g: int) -> ExactMatrix:
        """Action of g in N(H) (an element of the functor's group)."""
        return self.space.induced(self.functor.conj(g, self.subgroup), self.space)

    def generator_actions(self) -> list[ExactMatrix]:
        W = self.weyl
        return [self.action(W.section[w]) for w in generators(W.group.whole)]


@dataclass
class ConjugationModuleData:
    """The family (M-bar(H))_H for all subgroups H of the functor's group."""

    functor: MackeyFunctorData
    modules: dict[int, BarModule]

    def check(self) -> bool:
        """Actions are invertible, trivial on H and multiplicative on N(H)."""
        G = self.functor.group
        for h, B in self.modules.items():
            N = B.weyl.top
            for x in self.functor.lattice.subgroups[h].members:
                if B.action(x) != ExactMatrix.identity(B.dim, self.functor.field):
                    return False
            for a in N.members:
                Aa = B.action(a)
                if rank(Aa) != B.dim:
                    return False
                for b in generators(N):
                    if B.action(G.table[a][b]) != Aa @ B.action(b):
                        return False
        return True


def bar(M: MackeyFunctorData, h: int) -> BarModule:
    key = ("bar", h)
    if key not in M._cache:
        imgs = [col for m in M.maximal(h) for col in M.tmaps[(h, m)].columns]
        space = QuotientSpace(M.dims[h], imgs, M.field)
        H = M.lattice.subgroups[h]
        N = normalizer(M.group, H, within=M.top)
        M._cache[key] = BarModule(M, h, space, QuotientGroup(M.group, H, N))
    return M._cache[key]


def bar_family(M: MackeyFunctorData) -> ConjugationModuleData:
    return ConjugationModuleData(M, {h: bar(M, h) for h in M.subs})


def _bar_map(M: MackeyFunctorData, g: int, k: int) -> ExactMatrix:
    """Map M-bar(K) -> M-bar(gKg^-1) induced by c^g."""
    gk = M.lattice.conj_idx[g][k]
    return bar(M, k).space.induced(M.conj(g, k), bar(M, gk).space)


# --------------------------------------------------------------------------
# twin functor and twin-dual


@dataclass(frozen=True)
class TwinDims:
    subgroup: int
    twin_dual: int        # dim of the Q-coinvariants of the sum of dual bars
    twin: int             # dim of the Q-fixed points of the sum of bars
    bar_of_twin_dual: int  # dim of (M°)-bar(Q)
    bar: int              # dim of M-bar(Q)
    evaluation: int       # dim M(Q)


def twin_dual(M: MackeyFunctorData, q: int) -> TwinDims:
    """Dimensions of M°(Q), TM(Q) and of the bar of M° at Q."""
    L = M.lattice
    Q = L.subgroups[q]
    below = L.below(q)
    offs, n = {}, 0
    for k in below:
        offs[k] = n
        n += bar(M, k).dim
    F = M.field
    inv = M.group.inverse

    def action(g: int, dual: bool) -> ExactMatrix:
        A = [[0] * n for _ in range(n)]
        for k in below:
            gk = L.conj_idx[g][k]
            if dual:
                # (g.phi)(v) = phi(g^-1 v): block (gK, K) is the transpose of c^{g^-1} on bars
                B = _bar_map(M, inv[g], gk).T
            else:
                B = _bar_map(M, g, k)
            for i, row in enumerate(B.rows):
                for j, x in enumerate(row):
                    A[offs[gk] + i][offs[k] + j] = x
        return ExactMatrix(A, n, F)

    eye = ExactMatrix.identity(n, F)
    gens = generators(Q)
    if n == 0:
        return TwinDims(q, 0, 0, 0, bar(M, q).dim, M.dims[q])
    moved = [action(g, True) - eye for g in gens]
    coinv_rel = hstack(moved) if moved else ExactMatrix.zeros(n, 0, F)
    dual_dim = n - rank(coinv_rel)
    fixed = vstack([action(g, False) - eye for g in gens]) if gens else ExactMatrix.zeros(0, n, F)
    twin_dim = nullspace(fixed).ncols
    # transfers into M°(Q) are induced by the inclusions of the summands K <= R < Q
    proper = [[int(i == offs[k] + j) for i in range(n)] for k in below if k != q
              for j in range(bar(M, k).dim)]
    if proper:
        rel = hstack([coinv_rel, ExactMatrix.from_columns(proper, n, F)]) if moved else \
            ExactMatrix.from_columns(proper, n, F)
    else:
        rel = coinv_rel
    bar_dual = n - rank(rel)
    return TwinDims(q, dual_dim, twin_dim, bar_dual, bar(M, q).dim, M.dims[q])


# --------------------------------------------------------------------------
# deflation-by-quotient and compatibility of the bar construction


def jef_space(M: MackeyFunctorData, n: int, k: int, extra: Sequence[int] = ()) -> QuotientSpace:
    """(Jef_{G/N} M)(K/N): M(K) modulo transfers from every L <= K not containing N.

    ``extra`` adds the transfers from further subgroups of K (used for the bar of Jef).
    """
    L = M.lattice
    N = L.subgroups[n]
    imgs = []
    for l in L.below(k):
        if l == k:
            continue
        if not N <= L.subgroups[l] or l in extra:
            imgs.extend(M.tr(k, l).columns)
    return QuotientSpace(M.dims[k], imgs, M.field)


@dataclass(frozen=True)
class BarCompatibility:
    part: int
    dim_left: int
    dim_right: int
    traces_left: tuple
    traces_right: tuple

    @property
    def ok(self) -> bool:
        return self.dim_left == self.dim_right and self.traces_left == self.traces_right


def check_bar_compatibility(M: MackeyFunctorData, part: int, h: int, k: int | None = None,
                n: int | None = None) -> BarCompatibility:
    """Compare the bar construction with restriction (part 1, K given) or
    with Jef by a normal subgroup (part 2, N given).

    Part 1: bar of Res_K M at H against M-bar(H) restricted to N_K(H)/H.
    Part 2: bar of Jef_{G/N} M at H/N against M-bar(H), N <= H.
    Both sides report the dimension and the traces of the action of every
    element of the relevant normalizer.
    """
    L, G = M.lattice, M.group
    H = L.subgroups[h]
    right = bar(M, h)
    if part == 1:
        K = L.subgroups[k]
        R = restrict(M, K)
        left = bar(R, h)
        els = normalizer(G, H, within=K).members
        tl = tuple(left.action(g).trace() for g in els)
        tr_ = tuple(right.action(g).trace() for g in els)
        return BarCompatibility(1, left.dim, right.dim, tl, tr_)
    N = L.subgroups[n]
    if not (N <= H and is_normal(G, N, M.top)):
        raise ValueError("part 2 needs N normal in G and N <= H")
    above_n = [m for m in L.maximal_subgroups(h) if N <= L.subgroups[m]]
    space = jef_space(M, n, h, extra=above_n)
    els = normalizer(G, H, within=M.top).members
    tl = tuple(space.induced(M.conj(g, h), space).trace() for g in els)
    tr_ = tuple(right.action(g).trace() for g in els)
    return BarCompatibility(2, space.dim, right.dim, tl, tr_)


def jef_res_bar_dim(M: MackeyFunctorData, h: int) -> int:
    """Evaluation of Jef_{N(H)/H} Res_{N(H)} M at H/H, summing transfers from all L < H."""
    N = normalizer(M.group, M.lattice.subgroups[h], within=M.top)
    R = restrict(M, N)
    return jef_space(R, h, h).dim
