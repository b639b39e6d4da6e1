"""Finite p-groups as Cayley tables, with their subgroup and subquotient combinatorics.

Elements of a group of order n are the integers ``0..n-1`` with ``0`` the
identity.  Subgroups are stored as sorted member tuples together with a
bitmask; every canonical choice in this package (class representatives,
double coset representatives, orderings) is the lexicographically least one.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_MAX_ORDER = 32
HARD_MAX_ORDER = 64


class GroupError(ValueError):
    """Raised for malformed group specs or inconsistent tables."""


def _prime_power(n: int) -> int | None:
    """Return p if n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def _mask(members: Iterable[int]) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the index of ``a*b``.  Instances are treated as
    immutable; derived data (subgroup lattice, Weyl groups, ...) is cached on
    the instance.
    """

    def __init__(self, name: str, table: Sequence[Sequence[int]], prime: int | None = None,
                 check: bool = True):
        n = len(table)
        self.name = name
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        if check:
            _check_table(self.table)
        if prime is None and n > 1:
            prime = _prime_power(n)
            if prime is None:
                raise GroupError(f"{name}: order {n} is not a prime power")
        self.prime = prime
        self.inverse = tuple(row.index(0) for row in self.table)
        # conj[g][h] = g h g^-1
        t, inv = self.table, self.inverse
        self.conj = tuple(tuple(t[t[g][h]][inv[g]] for h in range(n)) for g in range(n))
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    @property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        """Wrap a member set, checking closure."""
        h = Subgroup(self, tuple(sorted(set(members))))
        if 0 not in h.members or any(self.table[a][b] not in h for a in h.members
                                     for b in h.members):
            raise GroupError(f"{sorted(h.members)} is not a subgroup of {self.name}")
        return h

    def generate(self, gens: Iterable[int]) -> "Subgroup":
        return Subgroup.from_mask(self, closure(self, 1, gens))

    def lattice(self, max_order: int = DEFAULT_MAX_ORDER) -> "SubgroupLattice":
        return all_subgroups(self, max_order)


def _check_table(t: tuple[tuple[int, ...], ...]) -> None:
    n = len(t)
    if any(len(row) != n for row in t):
        raise GroupError("multiplication table is not square")
    for a in range(n):
        if t[0][a] != a or t[a][0] != a:
            raise GroupError("0 is not a two-sided identity")
        if sorted(t[a]) != list(range(n)):
            raise GroupError(f"row {a} is not a permutation")
    for a in range(n):
        ta = t[a]
        for b in range(n):
            tab = t[ta[b]]
            tb = t[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupError(f"associativity fails at {(a, b, c)}")


def closure(G: FiniteGroup, mask: int, gens: Iterable[int]) -> int:
    """Bitmask of the subgroup generated by ``mask`` together with ``gens``."""
    t = G.table
    gens = list(set(_members(mask)) | set(gens))
    mask |= 1
    frontier = _members(mask)
    while frontier:
        new = []
        for a in frontier:
            row = t[a]
            for g in gens:
                x = row[g]
                if not (mask >> x) & 1:
                    mask |= 1 << x
                    new.append(x)
        frontier = new
    return mask


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FiniteGroup = field(repr=False)
    members: tuple[int, ...]
    mask: int = field(default=0, repr=False)

    def __post_init__(self):
        if not self.mask:
            object.__setattr__(self, "mask", _mask(self.members))

    @classmethod
    def from_mask(cls, G: FiniteGroup, mask: int) -> "Subgroup":
        return cls(G, _members(mask), mask)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.mask == other.mask and self.group is other.group

    def __hash__(self) -> int:
        return hash(self.mask)

    def key(self) -> tuple:
        """Canonical sort key: size first, then the member tuple."""
        return (len(self.members), self.members)

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.from_mask(self.group, self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.from_mask(self.group, closure(self.group, self.mask, _members(other.mask)))


def conjugate(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    """The subgroup g H g^-1."""
    row = G.conj[g]
    m = 0
    for h in H.members:
        m |= 1 << row[h]
    return Subgroup.from_mask(G, m)


def _conj_mask(G: FiniteGroup, mask: int, g: int) -> int:
    row = G.conj[g]
    m = 0
    for h in _members(mask):
        m |= 1 << row[h]
    return m


def normalizer(G: FiniteGroup, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """N_G(H), or N_within(H) when ``within`` is given."""
    els = within.members if within is not None else G.elements()
    return Subgroup(G, tuple(g for g in els if _conj_mask(G, H.mask, g) == H.mask))


def is_normal(G: FiniteGroup, N: Subgroup, H: Subgroup | None = None) -> bool:
    """Whether N is normal in H (default: in G)."""
    els = H.members if H is not None else G.elements()
    return all(_conj_mask(G, N.mask, g) == N.mask for g in els)


def is_cyclic(H: Subgroup) -> bool:
    G = H.group
    n = H.order
    return any(G.element_order(h) == n for h in H.members)


def is_conjugate(G: FiniteGroup, H: Subgroup, K: Subgroup, within: Subgroup | None = None) -> int | None:
    """Least g (in ``within``, default G) with g H g^-1 = K, or None."""
    if H.order != K.order:
        return None
    els = within.members if within is not None else G.elements()
    for g in els:
        if _conj_mask(G, H.mask, g) == K.mask:
            return g
    return None


def double_cosets(G: FiniteGroup, H: Subgroup, K: Subgroup) -> list[int]:
    """Least element of each double coset H x K, in increasing order."""
    t = G.table
    seen = 0
    reps = []
    for x in range(G.order):
        if (seen >> x) & 1:
            continue
        reps.append(x)
        for h in H.members:
            hx = t[h][x]
            row = t[hx]
            for k in K.members:
                seen |= 1 << row[k]
    return reps


def double_coset(G: FiniteGroup, H: Subgroup, x: int, K: Subgroup) -> tuple[int, ...]:
    t = G.table
    return tuple(sorted({t[t[h][x]][k] for h in H.members for k in K.members}))


def generators(H: Subgroup) -> tuple[int, ...]:
    """A small generating set for H, picked greedily in index order."""
    G = H.group
    gens: list[int] = []
    mask = 1
    for h in H.members:
        if not (mask >> h) & 1:
            gens.append(h)
            mask = closure(G, mask, [h])
            if mask == H.mask:
                break
    return tuple(gens)


# --------------------------------------------------------------------------
# subgroup lattice


class SubgroupLattice:
    """All subgroups of G, their conjugacy classes and normalizers.

    ``subgroups`` is sorted by (order, member tuple); ``classes`` lists the
    conjugacy classes as tuples of subgroup indices, ordered by their
    representative, which is the first (least) member of the class.
    """

    def __init__(self, G: FiniteGroup, subgroups: list[Subgroup]):
        self.group = G
        self.subgroups = sorted(subgroups, key=Subgroup.key)
        self.index = {H.mask: i for i, H in enumerate(self.subgroups)}
        n = len(self.subgroups)
        if len(self.index) != n:
            raise GroupError("duplicate subgroups in lattice")
        # conj_idx[g][i] = index of g H_i g^-1
        self.conj_idx = tuple(
            tuple(self.index[_conj_mask(G, H.mask, g)] for H in self.subgroups)
            for g in G.elements())
        self.class_of = [-1] * n
        classes = []
        for i in range(n):
            if self.class_of[i] >= 0:
                continue
            orbit = sorted({row[i] for row in self.conj_idx})
            for j in orbit:
                self.class_of[j] = len(classes)
            classes.append(tuple(orbit))
        self.classes = classes
        self.reps = [c[0] for c in classes]
        self.normalizers = [
            Subgroup(G, tuple(g for g in G.elements() if self.conj_idx[g][i] == i))
            for i in range(n)]

    def __len__(self) -> int:
        return len(self.subgroups)

    def idx(self, H: Subgroup) -> int:
        return self.index[H.mask]

    def rep(self, c: int) -> Subgroup:
        return self.subgroups[self.reps[c]]

    def class_index(self, H: Subgroup) -> int:
        return self.class_of[self.index[H.mask]]

    def conj(self, g: int, i: int) -> int:
        return self.conj_idx[g][i]

    def contains(self, i: int, j: int) -> bool:
        """Whether subgroup i is contained in subgroup j."""
        return self.subgroups[i].mask & ~self.subgroups[j].mask == 0

    @property
    def inclusion(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in range(len(self)) if self.contains(i, j)]

    def below(self, j: int) -> list[int]:
        """Indices of the subgroups of subgroup j."""
        m = self.subgroups[j].mask
        return [i for i, H in enumerate(self.subgroups) if H.mask & ~m == 0]

    def maximal_subgroups(self, j: int) -> list[int]:
        sub = [i for i in self.below(j) if i != j]
        return [i for i in sub
                if not any(k != i and self.contains(i, k) for k in sub)]

    def cyclic_classes(self) -> list[int]:
        return [c for c in range(len(self.classes)) if is_cyclic(self.rep(c))]

    def noncyclic_classes(self) -> list[int]:
        return [c for c in range(len(self.classes)) if not is_cyclic(self.rep(c))]

    def classes_within(self, V: Subgroup) -> list[tuple[int, ...]]:
        """V-conjugacy classes of subgroups of V, canonically ordered."""
        key = ("within", V.mask)
        cache = self.__dict__.setdefault("_within", {})
        if key not in cache:
            below = self.below(self.index[V.mask])
            seen = set()
            out = []
            for i in below:  # already in canonical order
                if i in seen:
                    continue
                orbit = tuple(sorted({self.conj_idx[v][i] for v in V.members}))
                seen.update(orbit)
                out.append(orbit)
            cache[key] = out
        return cache[key]

    def class_rep_within(self, V: Subgroup, i: int) -> int:
        """Index of the canonical V-conjugate of subgroup i (i must lie in V)."""
        return min(self.conj_idx[v][i] for v in V.members)


def all_subgroups(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> SubgroupLattice:
    """Every subgroup of G: cyclic subgroups, then pairwise joins to a fixed point."""
    if G.order > HARD_MAX_ORDER or G.order > max_order:
        raise GroupError(f"|{G.name}| = {G.order} exceeds the order bound {min(max_order, HARD_MAX_ORDER)}")
    if "lattice" in G._cache:
        return G._cache["lattice"]
    found = {closure(G, 1, [g]) for g in G.elements()}
    joined: dict[int, int] = {}
    frontier = set(found)
    while frontier:
        new = set()
        current = list(found)
        for a in frontier:
            for b in current:
                u = a | b
                if u in joined:
                    continue
                j = closure(G, u, ())
                joined[u] = j
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    lat = SubgroupLattice(G, [Subgroup.from_mask(G, m) for m in found])
    G._cache["lattice"] = lat
    return lat


def brute_force_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups by testing every subset containing 1 for closure (tiny groups only)."""
    t = G.table
    n = G.order
    out = []
    for bits in range(1 << (n - 1)):
        mask = (bits << 1) | 1
        mem = _members(mask)
        if n % len(mem):
            continue
        if all((mask >> t[a][b]) & 1 for a in mem for b in mem):
            out.append(mem)
    return sorted(out, key=lambda m: (len(m), m))


# --------------------------------------------------------------------------
# quotients


class QuotientGroup:
    """``top / kernel`` for a subgroup ``top`` of ``parent`` and kernel normal in it.

    Cosets are numbered by increasing least element, so the coset of the
    identity is 0.  ``project`` maps elements of ``top`` to coset indices and
    ``section`` gives the least element of each coset.
    """

    def __init__(self, parent: FiniteGroup, kernel: Subgroup, top: Subgroup | None = None,
                 name: str | None = None):
        top = top if top is not None else parent.whole
        if not kernel <= top or not is_normal(parent, kernel, top):
            raise GroupError("kernel is not a normal subgroup of the top group")
        self.parent = parent
        self.kernel = kernel
        self.top = top
        t = parent.table
        project: dict[int, int] = {}
        section = []
        for x in top.members:
            if x in project:
                continue
            c = len(section)
            section.append(x)
            for k in kernel.members:
                project[t[x][k]] = c
        self.project = project
        self.section = tuple(section)
        table = [[project[t[a][b]] for b in section] for a in section]
        self.group = FiniteGroup(name or f"{parent.name}/{kernel.order}", table,
                                 prime=parent.prime if len(section) > 1 else None, check=False)

    @property
    def cosets(self) -> FiniteGroup:
        return self.group

    def image(self, H: Subgroup) -> Subgroup:
        """Image in the quotient of a subgroup H of ``top``."""
        return Subgroup.from_mask(self.group, _mask(self.project[h] for h in H.members))

    def preimage(self, T: Subgroup) -> Subgroup:
        return Subgroup(self.parent, tuple(sorted(x for x in self.top.members
                                                  if T.mask >> self.project[x] & 1)))


def weyl(G: FiniteGroup, Q: Subgroup) -> QuotientGroup:
    """N_G(Q)/Q with its projection (cached per subgroup)."""
    cache = G._cache.setdefault("weyl", {})
    if Q.mask not in cache:
        cache[Q.mask] = QuotientGroup(G, Q, normalizer(G, Q), name=f"W({G.name};{Q.order})")
    return cache[Q.mask]


def quotient(G: FiniteGroup, N: Subgroup, top: Subgroup | None = None) -> QuotientGroup:
    cache = G._cache.setdefault("quotient", {})
    top = top if top is not None else G.whole
    key = (top.mask, N.mask)
    if key not in cache:
        cache[key] = QuotientGroup(G, N, top, name=f"{G.name}[{top.order}/{N.order}]")
    return cache[key]


# --------------------------------------------------------------------------
# subquotients


@dataclass(frozen=True)
class Subquotient:
    big: Subgroup
    small: Subgroup

    def __post_init__(self):
        if not (self.small <= self.big and is_normal(self.big.group, self.small, self.big)):
            raise GroupError("small is not normal in big")


class SubquotientClasses:
    """G-conjugacy classes of pairs (Q, N) with N normal in Q.

    Pairs are stored as ``(q, n)`` subgroup indices into the lattice.  Classes
    are ordered by the key ``(|Q|, Q, |N|, N)`` of their representative, which
    is the lexicographically least pair in the orbit.
    """

    def __init__(self, lattice: SubgroupLattice):
        self.lattice = lattice
        G = lattice.group
        subs = lattice.subgroups
        pairs = []
        for q, Q in enumerate(subs):
            for n in lattice.below(q):
                if Q <= lattice.normalizers[n]:
                    pairs.append((q, n))
        self.pairs = pairs
        index: dict[tuple[int, int], int] = {}
        orbits = []
        for pr in pairs:
            if pr in index:
                continue
            orbit = sorted({(lattice.conj_idx[g][pr[0]], lattice.conj_idx[g][pr[1]])
                            for g in G.elements()})
            for o in orbit:
                index[o] = -1
            orbits.append(tuple(orbit))

        def okey(orbit):
            q, n = orbit[0]
            return (subs[q].key(), subs[n].key())

        orbits.sort(key=okey)
        for c, orbit in enumerate(orbits):
            for o in orbit:
                index[o] = c
        self.classes = orbits
        self.index = index
        self.reps = [o[0] for o in orbits]

    def __len__(self) -> int:
        return len(self.classes)

    def rep(self, c: int) -> Subquotient:
        q, n = self.reps[c]
        return Subquotient(self.lattice.subgroups[q], self.lattice.subgroups[n])

    def class_of(self, Q: Subgroup, N: Subgroup) -> int:
        return self.index[(self.lattice.idx(Q), self.lattice.idx(N))]

    def is_cyclic(self, c: int) -> bool:
        """Whether the quotient Q/N of the representative is cyclic."""
        q, n = self.reps[c]
        Q, N = self.lattice.subgroups[q], self.lattice.subgroups[n]
        G = self.lattice.group
        # Q/N is cyclic iff some x in Q has x^k in N only for k divisible by |Q:N|
        idx = Q.order // N.order
        t = G.table
        for x in Q.members:
            y, k = x, 1
            while not (N.mask >> y) & 1:
                y = t[y][x]
                k += 1
            if k == idx:
                return True
        return False

    def cyclic_classes(self) -> list[int]:
        return [c for c in range(len(self)) if self.is_cyclic(c)]

    def noncyclic_classes(self) -> list[int]:
        return [c for c in range(len(self)) if not self.is_cyclic(c)]


def subquotient_classes(G: FiniteGroup) -> SubquotientClasses:
    if "sq" not in G._cache:
        G._cache["sq"] = SubquotientClasses(all_subgroups(G))
    return G._cache["sq"]


# --------------------------------------------------------------------------
# constructions


def from_normal_forms(name: str, elements: Sequence[Hashable], mul: Callable) -> FiniteGroup:
    """Build a Cayley table from a list of normal forms (identity first)."""
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise GroupError(f"{name}: repeated normal forms")
    try:
        table = [[pos[mul(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise GroupError(f"{name}: product {exc} is not a normal form") from None
    return FiniteGroup(name, table)


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup("C1", [[0]], check=False)
    if _prime_power(n) is None:
        raise GroupError(f"C{n}: order is not a prime power")
    return FiniteGroup(f"C{n}", [[(a + b) % n for b in range(n)] for a in range(n)])


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    nb = B.order
    ta, tb = A.table, B.table
    table = [[ta[i // nb][j // nb] * nb + tb[i % nb][j % nb] for j in range(A.order * nb)]
             for i in range(A.order * nb)]
    return FiniteGroup(f"{A.name}x{B.name}", table)


def metacyclic_2group(name: str, m: int, t: int, s: int) -> FiniteGroup:
    """<a, b | a^m, b a b^-1 = a^t, b^2 = a^s> with normal forms a^i b^j, j in {0, 1}."""
    els = [(i, j) for j in range(2) for i in range(m)]
    els.sort(key=lambda e: (e != (0, 0), e[1], e[0]))

    def mul(x, y):
        i, j = x
        k, l = y
        e = i + (t ** j) * k
        if j + l == 2:
            e += s
        return (e % m, (j + l) % 2)

    return from_normal_forms(name, els, mul)


def heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 matrices over F_p, (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]]."""
    els = list(itertools.product(range(p), repeat=3))

    def mul(x, y):
        a, b, c = x
        a2, b2, c2 = y
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return from_normal_forms(f"He{p ** 3}", els, mul)


def _log2(n: int) -> int | None:
    k = n.bit_length() - 1
    return k if n == 1 << k else None


def _named(token: str) -> FiniteGroup:
    m = re.fullmatch(r"C(\d+)", token)
    if m:
        return cyclic_group(int(m.group(1)))
    m = re.fullmatch(r"(SD|D|Q|M)(\d+)", token)
    if m:
        kind, order = m.group(1), int(m.group(2))
        n = _log2(order)
        if n is None:
            raise GroupError(f"{token}: order must be a power of 2")
        half = order // 2
        if kind == "D" and n >= 2:
            return metacyclic_2group(token, half, -1, 0)
        if kind == "Q" and n >= 3:
            return metacyclic_2group(token, half, -1, half // 2)
        if kind == "SD" and n >= 4:
            return metacyclic_2group(token, half, half // 2 - 1, 0)
        if kind == "M" and n >= 4:
            return metacyclic_2group(token, half, half // 2 + 1, 0)
        raise GroupError(f"{token}: order too small for this family")
    m = re.fullmatch(r"He(\d+)", token)
    if m:
        q = int(m.group(1))
        p = round(q ** (1 / 3))
        if p ** 3 != q or _prime_power(p) != p:
            raise GroupError(f"{token}: order must be p^3")
        return heisenberg(p)
    raise GroupError(f"unknown group spec {token!r}")


def make_group(spec: str) -> FiniteGroup:
    """Build a group from a spec such as ``"C4"``, ``"C2xC2"``, ``"D8"``, ``"SD16"`` or ``"He27"``."""
    tokens = spec.strip().split("x")
    if not all(tokens):
        raise GroupError(f"malformed group spec {spec!r}")
    G = _named(tokens[0])
    for tok in tokens[1:]:
        G = direct_product(G, _named(tok))
    G.name = spec.strip()
    return G


BUILTINS = ("C2", "C4", "C8", "C16", "C3", "C9", "C27", "C2xC2", "C2xC4", "C2xC2xC2",
            "C3xC3", "D8", "Q8", "D16", "Q16", "SD16", "M16", "He27")
