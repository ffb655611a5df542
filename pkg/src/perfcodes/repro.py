"""End-to-end reproduction checks, shared by ``perfcodes repro`` and the test suite.

Each check returns a :class:`CriterionResult`; a check passes only if every
exact comparison holds and it finishes inside its time limit.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .core import (
    check_perfect,
    coset_representatives,
    fmt_support,
    kernel,
    kernel_brute,
    rank,
    weight_distribution,
    word,
    EchelonBasis,
    LinearCode,
)
from .groups import (
    is_homogeneous,
    is_transitive,
    order_identity_check,
    reduction_hypotheses,
    piercing_propagation,
    rot_z_brute,
    rot_z_criterion,
    transitivity_reduction,
    translator_witness,
    translator_witness_brute,
)
from .named import named_code, named_lambda
from .perm import Permutation, duplicator, tau
from .sts import (
    STSError,
    SteinerTripleSystem,
    ThetaFn,
    am_doubling,
    apply_perm,
    are_isomorphic,
    fano,
    neighborhood_sts,
    theta_from_lambda,
    validate,
)
from .vasiliev import lambda_balance

ALL_ONES_7 = word(range(1, 8))


@dataclass
class CriterionResult:
    key: str
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.key:<24} {self.seconds:8.2f}s (limit {self.limit:g}s)  {self.title}"


@dataclass(frozen=True)
class Criterion:
    key: str
    number: int
    title: str
    limit: float
    run: Callable[[], tuple[bool, dict]]


def _kernel_reps(code):
    ker = kernel(code)
    return coset_representatives(code, LinearCode(code.n, EchelonBasis(ker).basis()))


# --- 1 --------------------------------------------------------------------------

def check_construction() -> tuple[bool, dict]:
    h = named_code("hamming7_paper")
    d = {"h7_size": len(h), "h7_weights": weight_distribution(h)}
    ok = len(h) == 16 and d["h7_weights"] == {0: 1, 3: 7, 4: 7, 7: 1}
    for name in ("V22_1", "V3_11"):
        V = named_code(name)
        perfect, method = check_perfect(V)
        d[name] = {"n": V.n, "size": len(V), "rank": rank(V), "perfect": perfect, "method": method}
        ok &= V.n == 15 and len(V) == 2048 and perfect and d[name]["rank"] == 12
    return ok, d


# --- 2 --------------------------------------------------------------------------

def check_homogeneity_15() -> tuple[bool, dict]:
    d = {}
    ok = True
    for name in ("V22_1", "V3_11"):
        rep = is_homogeneous(named_code(name), name)
        d[name] = {"homogeneous": rep.homogeneous, "tested": len(rep.witnesses), "notes": rep.method_notes}
        ok &= rep.homogeneous is True and len(rep.witnesses) == 2048 // len(kernel(named_code(name)))
    return ok, d


# --- 3 --------------------------------------------------------------------------

def check_nontransitivity_15() -> tuple[bool, dict]:
    d = {}
    ok = True
    for name in ("V22_1", "V3_11"):
        V = named_code(name)
        rep = is_transitive(V, name)
        # exhaustive Sym(H) x F^7 search per base word, compared with the solver
        brute_fail = sorted(y for y in V.base if translator_witness_brute(V, y) is None)
        solver_fail = sorted(y for y in V.base if translator_witness(V, y) is None)
        d[name] = {
            "transitive": rep.transitive,
            "failing_translators": [fmt_support(y) for y in brute_fail],
            "solver_agrees": brute_fail == solver_fail,
        }
        ok &= rep.transitive is False and brute_fail == solver_fail and bool(brute_fail)
        if name == "V3_11":
            d[name]["all_ones_fails"] = ALL_ONES_7 in brute_fail
            ok &= ALL_ONES_7 in brute_fail
    return ok, d


# --- 4 --------------------------------------------------------------------------

def check_criterion_oracle(max_reps: int | None = None, workers: int | None = None) -> tuple[bool, dict]:
    workers = workers or min(8, os.cpu_count() or 1)
    d = {}
    ok = True
    for name in ("V22_1", "V3_11"):
        V = named_code(name)
        reps = _kernel_reps(V)
        if max_reps:
            reps = reps[:max_reps]
        sizes = []
        for z in reps:
            brute = rot_z_brute(V, z, workers=workers)
            crit = rot_z_criterion(V, z)
            sizes.append(len(crit))
            ok &= brute == crit
        d[name] = {"representatives": len(reps), "slice_sizes": sizes}
    return ok, d


# --- 5 --------------------------------------------------------------------------

def doubling_collapse_systems() -> list[SteinerTripleSystem]:
    F = fano()
    out = []
    for k in (1, 2, 5, 6):
        for zeros in combinations(sorted(F.triples), k):
            out.append(am_doubling(F, ThetaFn.with_zeros(F, zeros)))
    return out


def check_doubling_collapse() -> tuple[bool, dict]:
    systems = doubling_collapse_systems()
    ref = systems[0]
    ok = len(systems) == 56
    verified = 0
    for S in systems[1:]:
        w = are_isomorphic(S, ref)
        if w is None or apply_perm(w, S) != ref:
            ok = False
        else:
            verified += 1
    return ok, {"systems": len(systems), "isomorphic_to_first": verified}


# --- 6 --------------------------------------------------------------------------

def check_neighbourhood_doubling(samples: int = 100, seed: int = 0) -> tuple[bool, dict]:
    rng = random.Random(seed)
    h = named_code("hamming7_paper")
    d = {}
    ok = True
    for name in ("V22_1", "V3_11"):
        V = named_code(name)
        lam = named_lambda(name)
        mismatches = 0
        for z in rng.sample(list(V), samples):
            y = V.reduce(z)
            doubled = am_doubling(neighborhood_sts(h, y), theta_from_lambda(h, lam, y))
            if doubled != neighborhood_sts(V, z):
                mismatches += 1
        d[name] = {"samples": samples, "mismatches": mismatches, "relabeling": "identity"}
        ok &= mismatches == 0
    return ok, d


# --- 7 --------------------------------------------------------------------------

def check_homogeneity_31(extra_samples: int = 200) -> tuple[bool, dict]:
    W = named_code("V22_1_doubled")
    rep = is_homogeneous(W, "V22_1_doubled", extra_samples=extra_samples)
    return rep.homogeneous is True, {
        "n": W.n,
        "tested": len(rep.witnesses),
        "notes": rep.method_notes,
    }


# --- 8 --------------------------------------------------------------------------

def check_reduction() -> tuple[bool, dict]:
    lam = named_lambda("V22_1")
    hyp = reduction_hypotheses(lam)
    balance = lambda_balance(lam)
    prop = piercing_propagation(lam, 2)
    at31 = [p for p in prop if p["length"] == 31]
    rep31 = transitivity_reduction(lam, 1, "V22_1 lifted, length 31")
    rep63 = transitivity_reduction(lam, 2, "V22_1 lifted, length 63")
    ok = (
        all(hyp.values())
        and balance == (4, 12)
        and len([p for p in prop if p["length"] == 15]) == 7
        # at length 15 every component except the middle one is pierced
        and len(at31) == 14
        and all(p["R_j"] and p["R_j_plus_half"] for p in prop)
        and rep31.transitive is False
        and rep31.sizes["n"] == 31
    )
    return ok, {
        "hypotheses": hyp,
        "balance": balance,
        "propagation_checks": len(prop),
        "length_31": rep31.method_notes[0],
        "length_63": rep63.method_notes[0],
    }


# --- 9 --------------------------------------------------------------------------

def check_group_identities() -> tuple[bool, dict]:
    d = {}
    h = order_identity_check(named_code("hamming7_paper"), "hamming7_paper").extra
    d["hamming7_paper"] = h
    ok = (h["sym"], h["ker"], h["tr"], h["rot"]) == (168, 16, 16, 168)
    for name in ("V22_1", "V3_11"):
        e = order_identity_check(named_code(name), name).extra
        V = named_code(name)
        e["ker_brute_oracle"] = len(kernel_brute(V))
        # Rot again, this time as the union of criterion slices
        crit_rot = set().union(*(rot_z_criterion(V, z) for z in _kernel_reps(V)))
        e["rot_criterion"] = len(crit_rot)
        d[name] = e
        ok &= e["ker"] == e["ker_brute_oracle"] and e["rot"] == e["rot_criterion"]
    for e in d.values():
        ok &= e["identity_holds"] and e["sym_le_rot"] and e["rot_le_sym_ker"] and e["sym_closed"]
    return ok, d


# --- 10 -------------------------------------------------------------------------

def sts_mutants(count: int = 100, seed: int = 0) -> list[tuple[int, list[tuple[int, int, int]]]]:
    """Single-triple removals and additions applied to valid systems."""
    rng = random.Random(seed)
    pool = [
        fano(),
        neighborhood_sts(named_code("V22_1"), 0),
        neighborhood_sts(named_code("V3_11"), 0),
        neighborhood_sts(named_code("V22_1_doubled"), 0),
    ]
    out = []
    for k in range(count):
        S = pool[k % len(pool)]
        triples = sorted(S.triples)
        if k % 2 == 0:
            triples.pop(rng.randrange(len(triples)))
        else:
            while True:
                t = tuple(sorted(rng.sample(range(1, S.order + 1), 3)))
                if t not in S.triples:
                    break
            triples.append(t)
        out.append((S.order, triples))
    return out


def check_properties(instances: int = 1000, seed: int = 0) -> tuple[bool, dict]:
    rng = random.Random(seed)
    killed = 0
    mutants = sts_mutants(100, seed)
    for order, triples in mutants:
        try:
            validate(order, triples)
        except STSError:
            killed += 1
    # isomorphism witnesses on random relabellings
    systems = [neighborhood_sts(named_code(n), 0) for n in ("V22_1", "V3_11", "hamming15")]
    witnesses_ok = 0
    trials = 30
    for k in range(trials):
        A = systems[k % len(systems)]
        img = list(range(1, A.order + 1))
        rng.shuffle(img)
        B = apply_perm(Permutation(tuple(img)), A)
        w = are_isomorphic(A, B)
        witnesses_ok += w is not None and apply_perm(w, A) == B
    tau_ok = sigma_ok = 0
    for _ in range(instances):
        n = rng.choice((7, 15))
        u, v = rng.getrandbits(n), rng.getrandbits(n)
        tau_ok += tau(u, n) * tau(v, n) == tau(u ^ v, n)
        p = list(range(1, n + 1))
        q = list(range(1, n + 1))
        rng.shuffle(p)
        rng.shuffle(q)
        P, Q = Permutation(tuple(p)), Permutation(tuple(q))
        sigma_ok += duplicator(P) * duplicator(Q) == duplicator(P * Q)
    ok = killed == len(mutants) and witnesses_ok == trials and tau_ok == sigma_ok == instances
    return ok, {
        "mutants_killed": f"{killed}/{len(mutants)}",
        "witnesses_verified": f"{witnesses_ok}/{trials}",
        "tau_law": f"{tau_ok}/{instances}",
        "sigma_law": f"{sigma_ok}/{instances}",
    }


CRITERIA: tuple[Criterion, ...] = (
    Criterion("construction", 1, "named codes: sizes, weights, perfectness, rank 12", 1, check_construction),
    Criterion("homogeneity15", 2, "both length-15 codes are homogeneous (every kernel coset)", 300, check_homogeneity_15),
    Criterion("nontransitivity15", 3, "both length-15 codes are non-transitive; 1^7 fails for V3_11", 60, check_nontransitivity_15),
    Criterion("criterion-oracle", 4, "criterion slices equal brute-force slices on every kernel coset", 1800, check_criterion_oracle),
    Criterion("doubling-collapse", 5, "56 doublings of the Fano plane are isomorphic", 60, check_doubling_collapse),
    Criterion("neighbourhood-doubling", 6, "neighbourhood STS equals the doubling with theta from lambda", 60, check_neighbourhood_doubling),
    Criterion("homogeneity31", 7, "vasiliev(V22_1, 0) of length 31 is homogeneous", 1800, check_homogeneity_31),
    Criterion("reduction", 8, "reduction hypotheses, piercing propagation, length 31 non-transitive", 300, check_reduction),
    Criterion("group-identities", 9, "|Sym||Tr| = |Rot||Ker| and Sym <= Rot <= Sym(Ker)", 600, check_group_identities),
    Criterion("properties", 10, "STS mutants killed, witnesses verified, tau/sigma laws", 120, check_properties),
)


def criterion(key: str) -> Criterion:
    for c in CRITERIA:
        if key in (c.key, str(c.number)):
            return c
    raise KeyError(f"unknown criterion {key!r}; choose from {', '.join(c.key for c in CRITERIA)}")


def run_criterion(c: Criterion) -> CriterionResult:
    t0 = time.perf_counter()
    passed, detail = c.run()
    dt = time.perf_counter() - t0
    return CriterionResult(c.key, c.number, c.title, bool(passed) and dt < c.limit, dt, c.limit, detail)


def run_all(only: list[str] | None = None) -> list[CriterionResult]:
    selected = [criterion(k) for k in only] if only else list(CRITERIA)
    return [run_criterion(c) for c in selected]
