import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from perfcodes.core import hamming, word
from perfcodes.groups import sts_automorphisms
from perfcodes.named import named_code, named_lambda
from perfcodes.perm import Permutation
from perfcodes.sts import (
    NotACodeword,
    STSError,
    SteinerTripleSystem,
    ThetaFn,
    am_doubling,
    apply_perm,
    are_isomorphic,
    fano,
    invariants,
    is_sts,
    isomorphisms,
    neighborhood_sts,
    pasch_configurations,
    pasch_degrees,
    theta_from_lambda,
    validate,
)


def test_fano():
    F = fano()
    assert F.order == 7 and len(F) == 7
    assert (1, 2, 3) in F.triples
    assert F.third(1, 2) == 3


def test_validator_messages():
    with pytest.raises(STSError, match="covered twice"):
        validate(7, [(1, 2, 3), (1, 2, 4)])
    with pytest.raises(STSError, match="not covered"):
        validate(7, [(1, 2, 3)])
    with pytest.raises(STSError, match="distinct points"):
        validate(3, [(1, 2, 4)])
    assert not is_sts(7, [(1, 1, 2)])


def test_fano_automorphisms_by_brute_force():
    F = fano()
    brute = sum(apply_perm(Permutation(p), F) == F for p in permutations(range(1, 8)))
    assert brute == 168
    assert sts_automorphisms(F).order == 168
    assert len(list(isomorphisms(F, F, use_invariants=False))) == 168


def test_pg32_invariants():
    S = neighborhood_sts(hamming(15), 0)
    inv = invariants(S)
    assert inv.pasch_count == 105
    assert inv.pasch_degree_multiset == ((42, 15),)  # six points per configuration
    assert sts_automorphisms(S).order == 20160


def test_pasch_degree_sum():
    S = neighborhood_sts(named_code("V22_1"), 0)
    assert sum(pasch_degrees(S)) == 6 * len(pasch_configurations(S))


def test_length15_neighbourhood_invariants():
    for name in ("V22_1", "V3_11"):
        S = neighborhood_sts(named_code(name), 0)
        inv = invariants(S)
        assert inv.triple_count == 35
        assert sts_automorphisms(S).order == 192


def test_neighbourhood_requires_codeword(v22):
    with pytest.raises(NotACodeword):
        neighborhood_sts(v22, 1)


def test_neighbourhood_constant_on_kernel_cosets(v22):
    from perfcodes.core import kernel

    rng = random.Random(3)
    ker = list(kernel(v22))
    for z in rng.sample(list(v22), 10):
        v = rng.choice(ker)
        assert neighborhood_sts(v22, z) == neighborhood_sts(v22, z ^ v)


def test_doubling_sizes():
    F = fano()
    for bit in (0, 1):
        D = am_doubling(F, ThetaFn.constant(F, bit))
        assert D.order == 15 and len(D) == 35


def test_zero_theta_doubling_is_pg32():
    F = fano()
    D = am_doubling(F, ThetaFn.constant(F, 0))
    assert D == neighborhood_sts(hamming(15), 0)


def test_doubling_theta_validation():
    F = fano()
    with pytest.raises(STSError):
        ThetaFn(F, {(1, 2, 3): 0})
    other = apply_perm(Permutation.transposition(7, 1, 4), F)
    with pytest.raises(STSError):
        am_doubling(other, ThetaFn.constant(F))


def test_theta_from_lambda_matches_neighbourhood(h7, v22, lam22):
    for y in h7:
        th = theta_from_lambda(h7, lam22, y)
        assert am_doubling(neighborhood_sts(h7, y), th) == neighborhood_sts(v22, v22.lift(y))


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 16))))
def test_isomorphism_witness_reverifies(img):
    A = neighborhood_sts(named_code("V3_11"), 0)
    B = apply_perm(Permutation(tuple(img)), A)
    w = are_isomorphic(A, B)
    assert w is not None and apply_perm(w, A) == B


def test_non_isomorphic_distinguished():
    A = neighborhood_sts(hamming(15), 0)
    B = neighborhood_sts(named_code("V22_1"), 0)
    assert are_isomorphic(A, B) is None
    # without invariants the search itself must refute
    assert next(isomorphisms(A, B, use_invariants=False), None) is None
