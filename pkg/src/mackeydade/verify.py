"""The fixed catalog of verification checks run by ``mackeydade verify``.

Every check takes a group and a seeded RNG and returns ``(ok, witness)``;
witnesses hold dimensions, ranks and the first offending item, never floats.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .burnside import BurnsideElement, burnside_mult, lin_kernel, lin_matrix, mark_table
from .dade import DadeBasis, dade_restrict, delta_position, dmu_dim, underline_dmu
from .exactla import rank
from .groups import FiniteGroup, all_subgroups, is_normal, normalizer, subquotient_classes
from .lambda_ring import (LambdaElement, alpha, burnside_embed, lambda_mult, lin_mu_direct,
                          lin_mu_kernel, lin_mu_via_alpha, sq_ss_bijection)
from .mackey.algebra import basis_count_oracle, build_algebra
from .mackey.functors import (bar, burnside_functor, check_bar_compatibility, check_relations,
                              fixed_point_functor, jef_res_bar_dim, twin_dual)

# dimensions of ker Lin^mu worked out by hand for a few groups
KNOWN_KERNEL_DIMS = {"C2xC2": 1, "D8": 4, "Q8": 2, "C4": 0, "C8": 0, "C16": 0, "C9": 0}
KNOWN_SQ_COUNTS = {"C2xC2": 12, "D8": 24}
KNOWN_LIN_RANKS = {"D8": 20}
ALGEBRA_MAX_ORDER = 8


@dataclass
class CheckRecord:
    id: str
    theorem: str
    status: str
    witness: dict
    millis: int

    def as_dict(self) -> dict:
        return {"id": self.id, "theorem": self.theorem, "status": self.status,
                "witness": self.witness, "millis": self.millis}


@dataclass
class VerificationReport:
    group: str
    order: int
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def as_dict(self) -> dict:
        return {"group": self.group, "order": self.order,
                "checks": [c.as_dict() for c in self.checks]}


class Skip(Exception):
    """Raised by a check that does not apply to the given group."""


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# checks


def check_noncyclic_count(P: FiniteGroup, rng: random.Random):
    SQ = subquotient_classes(P)
    k = lin_mu_kernel(P).ncols
    d = dmu_dim(P)
    nc = len(SQ.noncyclic_classes())
    w = {"kernel_dim": k, "dmu_dim": d, "noncyclic_subquotients": nc}
    ok = k == d == nc
    if P.name in KNOWN_KERNEL_DIMS:
        w["expected"] = KNOWN_KERNEL_DIMS[P.name]
        ok = ok and k == KNOWN_KERNEL_DIMS[P.name]
    return ok, w


def check_alpha_iso(P: FiniteGroup, rng: random.Random):
    A = alpha(P)
    bij = sq_ss_bijection(P)
    r = rank(A)
    w = {"rows": A.nrows, "cols": A.ncols, "rank": r, "sq": len(bij.f), "ss": len(bij.ss_elements),
         "roundtrip_sq": bij.roundtrip_sq(), "roundtrip_ss": bij.roundtrip_ss()}
    ok = (A.nrows == A.ncols == r and len(bij.f) == len(bij.ss_elements)
          and bij.roundtrip_sq() and bij.roundtrip_ss())
    if P.name in KNOWN_SQ_COUNTS:
        w["expected_sq"] = KNOWN_SQ_COUNTS[P.name]
        ok = ok and len(bij.f) == KNOWN_SQ_COUNTS[P.name]
    return ok, w


def check_linearization_agree(P: FiniteGroup, rng: random.Random):
    D, V = lin_mu_direct(P), lin_mu_via_alpha(P)
    w = {"shape": list(D.shape)}
    if D == V:
        return True, w
    diff = D - V
    bad = next((i, j) for i in range(diff.nrows) for j in range(diff.ncols) if diff[i, j])
    w["first_difference"] = list(bad)
    return False, w


def check_linearization_exact(P: FiniteGroup, rng: random.Random):
    SQ = subquotient_classes(P)
    r = rank(lin_mu_direct(P))
    k = lin_mu_kernel(P).ncols
    cyc = len(SQ.cyclic_classes())
    w = {"rank": r, "kernel_dim": k, "sq": len(SQ), "cyclic_subquotients": cyc}
    ok = r == cyc and r + k == len(SQ)
    if P.name in KNOWN_LIN_RANKS:
        w["expected_rank"] = KNOWN_LIN_RANKS[P.name]
        ok = ok and r == KNOWN_LIN_RANKS[P.name]
    return ok, w


def check_delta_generator(P: FiniteGroup, rng: random.Random):
    n = dmu_dim(P)
    B = underline_dmu(P)
    pos = delta_position(P)
    w = {"dmu_dim": n, "dim": B.ncols, "delta_position": pos}
    if pos is None:
        return n == 0 and B.ncols == 0, w
    support = sorted({i for i in range(B.nrows) for j in range(B.ncols) if B[i, j]})
    w["support"] = support
    return B.ncols == 1 and support == [pos], w


def check_dade_restriction(P: FiniteGroup, rng: random.Random, chains: int = 20):
    L = all_subgroups(P)
    top = DadeBasis(P)
    w: dict = {"classes": len(top)}
    if not len(top):
        return True, w
    # self-restriction coefficient
    for k in range(len(top)):
        Q = top.rep(k)
        col = dade_restrict(P, Q).column(k)
        expect = [0] * len(col)
        expect[DadeBasis(P, Q).class_index(Q)] = normalizer(P, Q).order // Q.order
        if list(col) != expect:
            w["self_restriction"] = {"class": k, "got": [_frac(x) for x in col]}
            return False, w
    # top class vanishes on proper subgroups
    t = top.class_index(P.whole)
    for i, V in enumerate(L.subgroups):
        if V.order < P.order and any(dade_restrict(P, V).column(t)):
            w["top_class_survives_on"] = list(V.members)
            return False, w
    # transitivity on random chains U <= V <= W
    for _ in range(chains):
        Wi = rng.randrange(len(L))
        Vi = rng.choice(L.below(Wi))
        Ui = rng.choice(L.below(Vi))
        W_, V_, U_ = L.subgroups[Wi], L.subgroups[Vi], L.subgroups[Ui]
        lhs = dade_restrict(P, U_, V_) @ dade_restrict(P, V_, W_)
        if lhs != dade_restrict(P, U_, W_):
            w["chain"] = [Ui, Vi, Wi]
            return False, w
    w["chains"] = chains
    return True, w


def _random_lambda(P, rng):
    n = len(subquotient_classes(P))
    return LambdaElement.basis(P, rng.randrange(n))


def check_lambda_ring(P: FiniteGroup, rng: random.Random, triples: int = 200):
    one = LambdaElement.unit(P)
    n = len(subquotient_classes(P))
    for c in range(n):
        x = LambdaElement.basis(P, c)
        if lambda_mult(one, x) != x or lambda_mult(x, one) != x:
            return False, {"unit_fails_on": c}
    for _ in range(triples):
        a, b, c = (_random_lambda(P, rng) for _ in range(3))
        if lambda_mult(a, b) != lambda_mult(b, a):
            return False, {"noncommuting": [a.coords.index(1), b.coords.index(1)]}
        if lambda_mult(lambda_mult(a, b), c) != lambda_mult(a, lambda_mult(b, c)):
            return False, {"nonassociative": [x.coords.index(1) for x in (a, b, c)]}
    m = len(all_subgroups(P).classes)
    for i in range(m):
        for j in range(m):
            x, y = BurnsideElement.basis(P, i), BurnsideElement.basis(P, j)
            if burnside_embed(burnside_mult(x, y)) != lambda_mult(burnside_embed(x), burnside_embed(y)):
                return False, {"embedding_fails_on": [i, j]}
    return True, {"basis": n, "triples": triples, "embedding_pairs": m * m}


def check_burnside(P: FiniteGroup, rng: random.Random, pairs: int = 100):
    L = all_subgroups(P)
    T = mark_table(P).matrix
    m = len(L.classes)
    for h in range(m):
        H = L.rep(h)
        if T[h, 0] != P.order // H.order or T[h, h] != normalizer(P, H).order // H.order:
            return False, {"mark_table_entry": h}
        if any(T[h, k] for k in range(h + 1, m)):
            return False, {"not_triangular_at": h}
    for _ in range(pairs):
        a = BurnsideElement(P, tuple(Fraction(rng.randint(-3, 3)) for _ in range(m)))
        b = BurnsideElement(P, tuple(Fraction(rng.randint(-3, 3)) for _ in range(m)))
        prod = burnside_mult(a, b).marks()
        if prod != tuple(x * y for x, y in zip(a.marks(), b.marks())):
            return False, {"mark_homomorphism_fails": [[_frac(x) for x in a.coords],
                                                       [_frac(x) for x in b.coords]]}
    K = lin_kernel(P)
    nc = len(L.noncyclic_classes())
    r = rank(lin_matrix(P))
    w = {"classes": m, "pairs": pairs, "kernel_dim": K.ncols, "noncyclic_classes": nc,
         "lin_rank": r, "cyclic_classes": len(L.cyclic_classes())}
    ok = K.ncols == nc and r == len(L.cyclic_classes())
    if P.name == "C2xC2":
        v = K.column(0)
        w["kernel_vector"] = [_frac(x) for x in v]
        ok = ok and [x / v[0] for x in v] == [1, -1, -1, -1, 2]
    return ok, w


def check_mackey_algebra(P: FiniteGroup, rng: random.Random, triples: int = 500):
    if P.order > ALGEBRA_MAX_ORDER:
        raise Skip(f"algebra only built for order <= {ALGEBRA_MAX_ORDER}")
    A = build_algebra(P)
    oracle = basis_count_oracle(P)
    w = {"dim": A.dim, "oracle": oracle}
    if A.dim != oracle:
        return False, w
    one = A.unit()
    for b in A.basis:
        x = {b: 1}
        if A.multiply(one, x) != x or A.multiply(x, one) != x:
            w["unit_fails_on"] = str(b)
            return False, w
    if P.order <= 4:
        w["closure"] = len(A.closure_normal_forms())
        if w["closure"] != A.dim:
            return False, w
    else:
        triples = min(triples, 100)
    for x, y, z in A.random_triples(triples, seed=rng.randrange(2 ** 31)):
        lhs = A.multiply(A.product(x, y), {z: 1})
        rhs = A.multiply({x: 1}, A.product(y, z))
        if lhs != rhs:
            w["nonassociative"] = [str(x), str(y), str(z)]
            return False, w
    w["triples"] = triples
    return True, w


def check_bar_twin(P: FiniteGroup, rng: random.Random, conjugators: int = 8):
    L = all_subgroups(P)
    w: dict = {}
    for fld in ("Q", "Fp"):
        B = burnside_functor(P, fld)
        FP = fixed_point_functor(P, fld)
        for M in (B, FP):
            rep = check_relations(M, rng, conjugators=None if P.order <= 8 else conjugators)
            if not rep.ok:
                w[f"{M.name}_{fld}_relations"] = sorted(rep.failures)
                return False, w
        dims = sorted({bar(B, h).dim for h in B.subs})
        w[f"burnside_bar_dims_{fld}"] = dims
        if dims != [1]:
            return False, w
        for M in (B, FP):
            for q in M.subs:
                tw = twin_dual(M, q)
                if tw.bar_of_twin_dual != tw.bar:
                    w["twin_dual_bar"] = [M.name, fld, q]
                    return False, w
                if fld == "Q" and tw.twin_dual != tw.evaluation:
                    w["twin_dual_dim"] = [M.name, q, tw.twin_dual, tw.evaluation]
                    return False, w
        for h in B.subs:
            if jef_res_bar_dim(B, h) != bar(B, h).dim:
                w["deflation_bar"] = [fld, h]
                return False, w
        count = 0
        for k in range(len(L)):
            for h in L.below(k):
                count += 1
                if not check_bar_compatibility(B, 1, h, k=k).ok:
                    w["restriction_side"] = [fld, k, h]
                    return False, w
        for n in range(len(L)):
            if not is_normal(P, L.subgroups[n]):
                continue
            for h in range(len(L)):
                if L.contains(n, h):
                    count += 1
                    if not check_bar_compatibility(B, 2, h, n=n).ok:
                        w["deflation_side"] = [fld, n, h]
                        return False, w
        w[f"compatibility_instances_{fld}"] = count
    return True, w


@dataclass(frozen=True)
class CheckSpec:
    id: str
    theorem: str
    run: Callable


CATALOG = (
    CheckSpec("01-noncyclic-count", "dim ker QLin^mu = dim QD_mu = #noncyclic subquotient classes",
              check_noncyclic_count),
    CheckSpec("02-alpha-iso", "alpha_P is invertible and SQ_P(P) <-> SS_P(P) is a bijection",
              check_alpha_iso),
    CheckSpec("03-linearization-agree", "direct Lin^mu equals Lin^sum composed with alpha_P",
              check_linearization_agree),
    CheckSpec("04-linearization-exact", "rank Lin^mu = #cyclic subquotients, rank + kernel = |SQ_P(P)|",
              check_linearization_exact),
    CheckSpec("05-delta-generator", "common kernel of Jef o Res is spanned by Delta(P)",
              check_delta_generator),
    CheckSpec("06-dade-restriction", "Mackey formula restriction of Ten Delta classes",
              check_dade_restriction),
    CheckSpec("07-lambda-ring", "Lambda(P) is a unital commutative ring containing B(P)",
              check_lambda_ring),
    CheckSpec("08-burnside-marks", "mark homomorphism and kernel of QLin_P", check_burnside),
    CheckSpec("09-mackey-algebra", "normal forms of the Mackey algebra presentation",
              check_mackey_algebra),
    CheckSpec("10-bar-twin", "bar and twin-dual constructions on test functors", check_bar_twin),
)


def verify(P: FiniteGroup, seed: int = 0, timing: bool = True,
           only: set[str] | None = None) -> VerificationReport:
    report = VerificationReport(P.name, P.order)
    for spec in CATALOG:
        if only is not None and spec.id not in only:
            continue
        rng = random.Random(f"{seed}:{spec.id}")
        t0 = time.perf_counter()
        try:
            ok, witness = spec.run(P, rng)
            status = "pass" if ok else "fail"
        except Skip as e:
            status, witness = "skip", {"reason": str(e)}
        except Exception as e:  # a crash is a failed check, with the error as witness
            status, witness = "fail", {"error": f"{type(e).__name__}: {e}"}
        ms = round((time.perf_counter() - t0) * 1000) if timing else 0
        report.checks.append(CheckRecord(spec.id, spec.theorem, status, witness, ms))
    return report
