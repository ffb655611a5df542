import random

import pytest

from perfcodes.core import LinearCode, hamming, kernel, word
from perfcodes.groups import (
    Automorphism,
    LinearLambdaError,
    ReductionNotApplicable,
    UnsupportedCode,
    GroupTooLarge,
    criterion_pairs,
    find_equivalence,
    is_automorphism,
    is_homogeneous,
    is_transitive,
    is_translator,
    is_two_transitive,
    order_identity_check,
    reduction_hypotheses,
    rot_slice,
    rot_slice_brute,
    rot_z_brute,
    rot_z_criterion,
    sym_group,
    transitivity_reduction,
    translator_witness,
    translator_witness_brute,
)
from perfcodes.named import named_code, named_lambda
from perfcodes.perm import Permutation, duplicator, tau
from perfcodes.vasiliev import ExplicitLambda, block_rotation, lambda_lift, vasiliev_construct

ALL_ONES = word(range(1, 8))


def test_sym_h7_is_two_transitive(h7):
    G = sym_group(h7)
    assert G.order == 168 and G.is_closed()
    assert is_two_transitive(G.elements)


def test_base_rotation_slices_equal_sym_by_brute_force(h7):
    sym = set(sym_group(h7).elements)
    for y in h7:
        assert set(rot_slice_brute(h7, y)) == sym


def test_sym_of_length15_codes(v22, v3):
    assert sym_group(v22).order == 32
    assert sym_group(v3).order == 16


def test_rot_slice_outside_code_is_empty(v22):
    assert rot_slice(v22, 1) == []


def test_criterion_at_zero_is_sym(v22, v3):
    for V in (v22, v3):
        assert rot_z_criterion(V, 0) == set(sym_group(V).elements)


def test_brute_agrees_with_criterion_at_zero(v22):
    assert rot_z_brute(v22, 0) == rot_z_criterion(v22, 0)


def test_brute_on_a_nonzero_coset(v3):
    z = next(w for w in v3 if w and rot_z_criterion(v3, w))
    assert rot_z_brute(v3, z) == rot_z_criterion(v3, z)


def test_criterion_elements_are_slice_elements(v22):
    rng = random.Random(2)
    for z in rng.sample(list(v22), 20):
        crit = rot_z_criterion(v22, z)
        for rho in crit:
            assert rho.fixes(8)
            assert is_automorphism(v22, Automorphism(z, rho))


def test_rot_z_rejects_non_codeword(v22):
    with pytest.raises(ValueError):
        rot_z_criterion(v22, 1)


def test_translator_witness_solves_membership(v22):
    for y in v22.base:
        w = translator_witness(v22, y)
        if w is None:
            continue
        pi, u = w
        rho = duplicator(pi) * tau(u, 7)
        assert is_automorphism(v22, Automorphism(v22.lift(y), rho))


def test_v3_all_ones_fails(v3):
    assert translator_witness(v3, ALL_ONES) is None
    assert translator_witness_brute(v3, ALL_ONES) is None


def test_v22_failing_set(v22):
    failing = {y for y in v22.base if not is_translator(v22, y)}
    expected = {
        word(s)
        for s in [(1, 2, 3), (1, 4, 5), (2, 3, 4, 5), (2, 4, 6), (1, 3, 4, 6), (1, 2, 5, 6),
                  (3, 4, 7), (2, 5, 7), (1, 3, 5, 7), (1, 6, 7), (2, 3, 6, 7), (4, 5, 6, 7)]
    }
    assert failing == expected
    assert ALL_ONES not in failing


def test_linear_code_is_transitive(h7):
    rep = is_transitive(hamming(15))
    assert rep.transitive is True


def test_linear_lambda_rejected(h7):
    V = vasiliev_construct(h7, named_lambda("zero"))
    with pytest.raises(LinearLambdaError):
        translator_witness(V, 0)


def test_unsupported_backing(v22):
    from perfcodes.core import ExplicitCode

    with pytest.raises(UnsupportedCode):
        is_transitive(ExplicitCode(15, list(v22)))


def test_nonlinear_base_rejected(v22):
    lam = ExplicitLambda(v22, {y: 0 for y in v22})
    W = vasiliev_construct(v22, lam)
    with pytest.raises(UnsupportedCode):
        is_transitive(W)


def test_homogeneous_reports(v22):
    rep = is_homogeneous(v22, "V22_1")
    assert rep.homogeneous is True and len(rep.witnesses) == 16


def test_homogeneity_budget_samples(v22):
    rep = is_homogeneous(v22, budget=3)
    assert rep.homogeneous is True and len(rep.witnesses) == 3
    assert "sampled" in rep.method_notes[0]


def test_reduction_hypotheses(lam22, lam3):
    for lam in (lam22, lam3):
        assert reduction_hypotheses(lam) == {
            "nonlinear": True,
            "unbalanced": True,
            "pierces_all_components": True,
        }


def test_reduction_not_applicable_for_zero():
    with pytest.raises(ReductionNotApplicable, match="nonlinear"):
        transitivity_reduction(named_lambda("zero"), 1)


def test_reduction_at_31_and_63(lam22):
    r31 = transitivity_reduction(lam22, 1)
    r63 = transitivity_reduction(lam22, 2)
    assert r31.transitive is False and r31.sizes["n"] == 31
    assert r63.transitive is False and r63.sizes["n"] == 63 and r63.sizes["rank"] == 58
    assert all(p["R_j"] and p["R_j_plus_half"] for p in r63.extra["piercing_propagation"])


def test_lifted_code_routes_through_reduction():
    rep = is_transitive(named_code("V3_11_lifted"), "V3_11_lifted")
    assert rep.transitive is False
    assert "reduction" in rep.method_notes[0]


def test_order_identity_h7(h7):
    e = order_identity_check(h7).extra
    assert (e["sym"], e["tr"], e["rot"], e["ker"]) == (168, 16, 168, 16)
    assert e["identity_holds"] and e["sym_le_rot"] and e["rot_le_sym_ker"]


def test_order_identity_v3(v3):
    e = order_identity_check(v3).extra
    assert e["lhs"] == e["rhs"] == 16 * 1024
    assert e["rot"] == 128 and e["ker"] == len(kernel(v3))


def test_find_equivalence_recovers_relabelling(v22):
    from perfcodes.core import ExplicitCode

    rng = random.Random(4)
    img = list(range(1, 16))
    rng.shuffle(img)
    p = Permutation(tuple(img))
    other = ExplicitCode(15, [p.apply_word(w) for w in v22])
    q = find_equivalence(v22, other)
    assert q is not None and {q.apply_word(w) for w in v22} == set(other)
    assert find_equivalence(v22, hamming(15)) is None


def test_find_equivalence_uses_candidates():
    a, b = named_code("V22_1_doubled"), named_code("V22_1_lifted")
    assert find_equivalence(a, b, candidates=[block_rotation(7)], limit=0) == block_rotation(7)


def test_brute_rejects_large_base():
    W = named_code("V22_1_doubled")
    with pytest.raises(GroupTooLarge):
        rot_z_brute(W, 0)


def test_rot_slice_empty_at_lift_of_all_ones(v3):
    z = v3.lift(ALL_ONES)
    assert rot_z_criterion(v3, z) == set() == rot_z_brute(v3, z)


def test_duplicators_are_pg32_automorphisms(h7):
    from perfcodes.groups import sts_automorphisms
    from perfcodes.sts import neighborhood_sts

    G = sts_automorphisms(neighborhood_sts(hamming(15), 0))
    assert all(duplicator(p) in G for p in sym_group(h7).elements)
