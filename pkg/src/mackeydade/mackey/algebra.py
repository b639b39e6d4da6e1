"""The Mackey algebra μ(G) from its presentation, by rewriting words to normal form.

Generators are ``c(g, H) : H -> gHg^-1``, ``r(H, K) : H -> K`` and
``t(H, K) : K -> H`` for K <= H, with subgroups given by lattice index.  A word
is a tuple of generators read as an algebra product, so the rightmost letter
acts first.  Rewriting uses

* kill a product whose adjacent letters do not compose,
* drop c(h, H) with h in H, r(H, H), t(H, H) in favour of the idempotent e(H),
* merge adjacent letters of the same kind (transitivity),
* move c to the right of t and to the left of r,
* expand r·t by the Mackey formula,

until every word has the shape t·c·r.  Each step lowers (number of r-before-t
pairs, length) lexicographically, so rewriting terminates.  The final t·c·r
word is moved to the canonical double coset representative and the canonical
subgroup class using the conjugation, transitivity and triviality relations.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from ..groups import FiniteGroup, SubgroupLattice, all_subgroups, double_cosets


class IllFormedWord(ValueError):
    pass


class Gen(NamedTuple):
    kind: str  # 'c', 'r', 't' or 'e'
    a: int     # c: element g; r/t: bigger subgroup H; e: subgroup
    b: int     # c: subgroup H; r/t: smaller subgroup K; e: unused (= a)


@dataclass(frozen=True, order=True)
class MackeyBasisElement:
    """t^H_{gL} c^g_L r^K_L with g canonical in H\\G/K and L canonical in H^g & K."""

    H: int
    K: int
    g: int
    L: int


Combination = dict  # MackeyBasisElement -> int


class MackeyAlgebra:
    def __init__(self, G: FiniteGroup):
        self.group = G
        self.lattice: SubgroupLattice = all_subgroups(G)
        self._dc: dict[tuple[int, int, int], int] = {}
        self._products: dict[tuple[MackeyBasisElement, MackeyBasisElement], Combination] = {}
        self.basis = self._enumerate_basis()
        self.index = {b: i for i, b in enumerate(self.basis)}

    # generators ------------------------------------------------------------

    def _sub(self, H) -> int:
        return H if isinstance(H, int) else self.lattice.idx(H)

    def c(self, g: int, H) -> Gen:
        if not 0 <= g < self.group.order:
            raise IllFormedWord(f"{g} is not an element")
        return Gen("c", g, self._sub(H))

    def r(self, H, K) -> Gen:
        H, K = self._sub(H), self._sub(K)
        if not self.lattice.contains(K, H):
            raise IllFormedWord("r^H_K needs K <= H")
        return Gen("r", H, K)

    def t(self, H, K) -> Gen:
        H, K = self._sub(H), self._sub(K)
        if not self.lattice.contains(K, H):
            raise IllFormedWord("t^H_K needs K <= H")
        return Gen("t", H, K)

    def e(self, H) -> Gen:
        H = self._sub(H)
        return Gen("e", H, H)

    def source(self, x: Gen) -> int:
        if x.kind in "ce":
            return x.b
        if x.kind == "r":
            return x.a
        return x.b

    def target(self, x: Gen) -> int:
        if x.kind == "c":
            return self.lattice.conj_idx[x.a][x.b]
        if x.kind in "te":
            return x.a
        return x.b

    def word(self, b: MackeyBasisElement) -> tuple[Gen, ...]:
        gL = self.lattice.conj_idx[b.g][b.L]
        return (Gen("t", b.H, gL), Gen("c", b.g, b.L), Gen("r", b.K, b.L))

    # basis -----------------------------------------------------------------

    def _enumerate_basis(self) -> list[MackeyBasisElement]:
        G, L = self.group, self.lattice
        out = []
        for h, H in enumerate(L.subgroups):
            for k, K in enumerate(L.subgroups):
                for g in double_cosets(G, H, K):
                    Y = self._meet_conj(h, g, k)
                    for cls in L.classes_within(L.subgroups[Y]):
                        out.append(MackeyBasisElement(h, k, g, cls[0]))
        return sorted(out)

    def _meet_conj(self, h: int, g: int, k: int) -> int:
        """Index of H^g & K = g^-1 H g & K."""
        L = self.lattice
        hg = L.conj_idx[self.group.inverse[g]][h]
        return L.index[L.subgroups[hg].mask & L.subgroups[k].mask]

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # rewriting -------------------------------------------------------------

    def _identity_like(self, x: Gen) -> bool:
        if x.kind == "e":
            return True
        if x.kind == "c":
            return (self.lattice.subgroups[x.b].mask >> x.a) & 1 == 1
        return x.a == x.b

    def _step(self, w: tuple[Gen, ...]) -> list[tuple[tuple[Gen, ...], int]] | None:
        """One rewrite of the leftmost redex, or None when w is in t·c·r shape."""
        L, G = self.lattice, self.group
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            kx, ky = x.kind, y.kind
            head, tail = w[:i], w[i + 2:]
            if kx == ky == "c":
                return [(head + (Gen("c", G.table[x.a][y.a], y.b),) + tail, 1)]
            if kx == ky == "r":
                return [(head + (Gen("r", y.a, x.b),) + tail, 1)]
            if kx == ky == "t":
                return [(head + (Gen("t", x.a, y.b),) + tail, 1)]
            if kx == "r" and ky == "c":
                # r^{gH}_{gK} c^g_H = c^g_K r^H_K
                g = y.a
                K = L.conj_idx[G.inverse[g]][x.b]
                return [(head + (Gen("c", g, K), Gen("r", y.b, K)) + tail, 1)]
            if kx == "c" and ky == "t":
                # c^g_H t^H_K = t^{gH}_{gK} c^g_K
                g = x.a
                return [(head + (Gen("t", L.conj_idx[g][y.a], L.conj_idx[g][y.b]),
                                 Gen("c", g, y.b)) + tail, 1)]
            if kx == "r" and ky == "t":
                return [(head + term + tail, 1) for term in self._mackey(y.a, x.b, y.b)]
        return None

    def _mackey(self, h: int, j: int, k: int) -> list[tuple[Gen, ...]]:
        """r^H_J t^H_K = sum over x in J\\H/K of t^J_{J & xK} c^x_{J^x & K} r^K_{J^x & K}."""
        G, L = self.group, self.lattice
        H, J, K = L.subgroups[h], L.subgroups[j], L.subgroups[k]
        terms = []
        for x in double_cosets(G, J, K):
            if x not in H:
                continue
            jx = L.conj_idx[G.inverse[x]][j]
            low = L.index[L.subgroups[jx].mask & K.mask]
            top = L.conj_idx[x][low]
            terms.append((Gen("t", j, top), Gen("c", x, low), Gen("r", k, low)))
        return terms

    def _dc_rep(self, h: int, g: int, k: int) -> int:
        key = (h, g, k)
        if key not in self._dc:
            G, L = self.group, self.lattice
            t = G.table
            self._dc[key] = min(t[t[a][g]][b] for a in L.subgroups[h].members
                                for b in L.subgroups[k].members)
        return self._dc[key]

    def _canonical(self, h: int, k: int, g: int, l: int) -> MackeyBasisElement:
        G, L = self.group, self.lattice
        t, inv = G.table, G.inverse
        g0 = self._dc_rep(h, g, k)
        Hm = L.subgroups[h].mask
        # g = a g0 b with a in H, b in K; then the word equals t c^{g0} r at bLb^-1
        b = next(b for b in L.subgroups[k].members
                 if (Hm >> t[t[g][inv[b]]][inv[g0]]) & 1)
        lb = L.conj_idx[b][l]
        Y = L.subgroups[self._meet_conj(h, g0, k)]
        return MackeyBasisElement(h, k, g0, L.class_rep_within(Y, lb))

    def _finish(self, w: tuple[Gen, ...]) -> MackeyBasisElement:
        tt = cc = rr = None
        for x in w:
            if x.kind == "t":
                tt = x
            elif x.kind == "c":
                cc = x
            elif x.kind == "r":
                rr = x
        if rr is not None:
            k, l = rr.a, rr.b
        else:
            k = l = self.source(w[-1])
        g = cc.a if cc is not None else 0
        h = tt.a if tt is not None else self.lattice.conj_idx[g][l]
        return self._canonical(h, k, g, l)

    def normalize(self, word: Sequence[Gen]) -> Combination:
        """Normal form of a word as an integer combination of basis elements."""
        word = tuple(word)
        if not word:
            raise IllFormedWord("empty word")
        out: Counter = Counter()
        stack = [(word, 1)]
        while stack:
            w, coeff = stack.pop()
            if any(self.source(w[i]) != self.target(w[i + 1]) for i in range(len(w) - 1)):
                continue
            core = tuple(x for x in w if not self._identity_like(x))
            if not core:
                s = self.source(w[-1])
                out[MackeyBasisElement(s, s, 0, s)] += coeff
                continue
            nxt = self._step(core)
            if nxt is None:
                out[self._finish(core)] += coeff
            else:
                stack.extend((nw, coeff * m) for nw, m in nxt)
        return {b: v for b, v in sorted(out.items()) if v}

    def normalize_product(self, a: Sequence[Gen], b: Sequence[Gen]) -> Combination:
        return self.normalize(tuple(a) + tuple(b))

    # algebra structure -----------------------------------------------------

    def product(self, x: MackeyBasisElement, y: MackeyBasisElement) -> Combination:
        key = (x, y)
        if key not in self._products:
            self._products[key] = {} if x.K != y.H else self.normalize(self.word(x) + self.word(y))
        return self._products[key]

    def multiply(self, u: Combination, v: Combination) -> Combination:
        out: Counter = Counter()
        for x, a in u.items():
            for y, b in v.items():
                for z, c in self.product(x, y).items():
                    out[z] += a * b * c
        return {b: v for b, v in sorted(out.items()) if v}

    def unit(self) -> Combination:
        return {MackeyBasisElement(h, h, 0, h): 1 for h in range(len(self.lattice))}

    def structure_constants(self) -> dict[tuple[int, int], dict[int, int]]:
        """All nonzero products of basis pairs, keyed by basis indices."""
        out = {}
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                p = self.product(x, y)
                if p:
                    out[(i, j)] = {self.index[z]: c for z, c in p.items()}
        return out

    def generator_words(self) -> list[tuple[Gen, ...]]:
        L, G = self.lattice, self.group
        out = []
        for h in range(len(L)):
            for g in G.elements():
                out.append((Gen("c", g, h),))
            for k in L.below(h):
                out.append((Gen("r", h, k),))
                out.append((Gen("t", h, k),))
        return out

    def closure_normal_forms(self) -> set[MackeyBasisElement]:
        """Basis elements reached by closing the generators under products."""
        found: set[MackeyBasisElement] = set()
        for w in self.generator_words():
            found.update(self.normalize(w))
        frontier = set(found)
        while frontier:
            new = set()
            for x in frontier:
                for y in list(found):
                    for p in (self.product(x, y), self.product(y, x)):
                        new.update(z for z in p if z not in found)
            found |= new
            frontier = new
        return found

    def random_triples(self, count: int, seed: int = 0) -> list[tuple[MackeyBasisElement, ...]]:
        """Composable basis triples (x.K == y.H, y.K == z.H) drawn with a fixed seed."""
        rng = random.Random(seed)
        by_top: dict[int, list[MackeyBasisElement]] = {}
        for b in self.basis:
            by_top.setdefault(b.H, []).append(b)
        out = []
        for _ in range(count):
            x = rng.choice(self.basis)
            y = rng.choice(by_top[x.K])
            z = rng.choice(by_top[y.K])
            out.append((x, y, z))
        return out


def build_algebra(G: FiniteGroup, max_order: int = 8) -> MackeyAlgebra:
    """μ(G) with its basis; products are computed (and cached) on demand."""
    if G.order > max_order:
        raise ValueError(f"|{G.name}| = {G.order} exceeds the Mackey algebra bound {max_order}")
    if "mackey_algebra" not in G._cache:
        G._cache["mackey_algebra"] = MackeyAlgebra(G)
    return G._cache["mackey_algebra"]


def basis_count_oracle(G: FiniteGroup) -> int:
    """Count (H, K, HgK, class of L <= H^g & K) quadruples by direct enumeration."""
    L = all_subgroups(G)
    t, inv = G.table, G.inverse
    total = 0
    for H in L.subgroups:
        for K in L.subgroups:
            seen: set[int] = set()
            for g in G.elements():
                if g in seen:
                    continue
                seen.update(t[t[a][g]][b] for a in H.members for b in K.members)
                Y = {t[t[inv[g]][x]][g] for x in H.members} & set(K.members)
                subs = [S for S in L.subgroups if set(S.members) <= Y]
                classes = {frozenset(frozenset(t[t[y][s]][inv[y]] for s in S.members) for y in Y)
                           for S in subs}
                total += len(classes)
    return total
