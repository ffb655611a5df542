import random

import pytest
from hypothesis import given, settings, strategies as st

from perfcodes.core import hamming, weight_distribution, word
from perfcodes.named import named_code
from perfcodes.vasiliev import (
    ComponentOutsideBase,
    ExplicitLambda,
    LambdaDomainError,
    LiftedLambda,
    MalformedTower,
    VasilievCode,
    block_rotation,
    full_parity_component,
    i_component,
    is_linear_lambda,
    is_piercing,
    join,
    lambda_from_zero_set,
    lambda_lift,
    lambda_lift_by_cosets,
    lambda_named,
    linearity_violation,
    maps_onto,
    printed_phi,
    split,
    vasiliev_construct,
)

V15_WEIGHTS = {0: 1, 3: 35, 4: 105, 5: 168, 6: 280, 7: 435, 8: 435, 9: 280, 10: 168, 11: 105, 12: 35, 15: 1}


@given(st.integers(0, 127), st.integers(0, 1), st.integers(0, 127))
def test_split_join(a, b, c):
    assert split(join(a, b, c, 7), 7) == (a, b, c)


def test_membership_matches_enumeration(v22):
    words = set(v22)
    assert len(words) == len(v22) == 2048
    rng = random.Random(1)
    for _ in range(3000):
        w = rng.getrandbits(15)
        assert (w in v22) == (w in words)


def test_member_layout(h7, lam22, v22):
    for y in h7:
        for x in (0, word([2]), word([1, 5, 7])):
            z = join(x ^ y, (x.bit_count() & 1) ^ lam22(y), x, 7)
            assert z in v22
            assert v22.reduce(z) == y
        assert v22.lift(y) in v22


@pytest.mark.parametrize("name", ["V22_1", "V3_11", "hamming15"])
def test_weight_distribution(name):
    assert weight_distribution(named_code(name)) == V15_WEIGHTS


def test_zero_lambda_gives_hamming15(h7):
    assert vasiliev_construct(h7) == hamming(15)


def test_lambda_domain_checked(h7):
    with pytest.raises(LambdaDomainError):
        ExplicitLambda(h7, {0: 0})
    with pytest.raises(LambdaDomainError):
        ExplicitLambda(h7, {y: 1 for y in h7})
    with pytest.raises(LambdaDomainError):
        lambda_from_zero_set(h7, [(1, 2)])
    with pytest.raises(KeyError):
        lambda_named("nope")


def test_lambda_on_wrong_base(h7, lam22):
    with pytest.raises(LambdaDomainError):
        VasilievCode(hamming(15), lam22)


def test_named_lambdas(lam22, lam3):
    assert lam22.balance() == (4, 12) == lam3.balance()
    assert not is_linear_lambda(lam22) and not is_linear_lambda(lam3)
    y, y2 = linearity_violation(lam22)
    assert lam22(y ^ y2) != lam22(y) ^ lam22(y2)
    assert is_linear_lambda(lambda_named("zero"))


def test_lift_agrees_with_coset_definition(lam22, lam3):
    for lam in (lam22, lam3):
        lifted = lambda_lift(lam, 1)
        table = lambda_lift_by_cosets(lam)
        assert set(table) == set(lifted.base)
        assert all(lifted(v) == b for v, b in table.items())


def test_lift_levels_and_balance(lam22):
    top = lambda_lift(lam22, 2)
    assert isinstance(top, LiftedLambda) and top.levels == 2
    assert top.base.n == 31
    assert top.balance() == (4 << 22, 12 << 22)
    assert lambda_lift(lam22, 1).balance() == (512, 1536)


def test_lift_needs_hamming_base(v22):
    lam = ExplicitLambda(v22, {y: 0 for y in v22})
    with pytest.raises(MalformedTower):
        lambda_lift(lam, 1)
    with pytest.raises(ValueError):
        lambda_lift(lambda_named("V22_1"), 0)


def test_lifted_lambda_stays_nonlinear(lam22):
    assert linearity_violation(lambda_lift(lam22, 1)) is not None


def test_components(h7, lam22):
    for i in range(1, 8):
        comp = i_component(h7, i)
        assert len(comp) == 8
        assert is_piercing(lam22, comp)
    R = full_parity_component(7)
    assert len(R) == 128 and all(w in hamming(15) for w in R.code.basis)
    with pytest.raises(ComponentOutsideBase):
        is_piercing(lam22, i_component(hamming(15), 1))


def test_zero_lambda_pierces_nothing(h7):
    zero = lambda_named("zero")
    assert not any(is_piercing(zero, i_component(h7, i)) for i in range(1, 8))


def test_piercing_propagates_to_length_15(lam22):
    lifted = lambda_lift(lam22, 1)
    for j in range(1, 8):
        assert is_piercing(lifted, i_component(lifted.base, j))
        assert is_piercing(lifted, i_component(lifted.base, j + 8))


@pytest.mark.parametrize("name", ["V22_1", "V3_11"])
def test_block_rotation_maps_doubled_onto_lifted(name):
    doubled = named_code(f"{name}_doubled")
    lifted = named_code(f"{name}_lifted")
    phi = block_rotation(7)
    assert maps_onto(phi, doubled, lifted)
    assert not maps_onto(phi.inverse(), doubled, lifted)


def test_literal_three_cycle_product_fails():
    assert not maps_onto(printed_phi(7), named_code("V22_1_doubled"), named_code("V22_1_lifted"))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_lazy_length31_membership_closed_under_periods(seed):
    W = named_code("V22_1_doubled")
    rng = random.Random(seed)
    z = W.sample(1, rng)[0]
    assert z in W
    for p in W.period_basis()[:5]:
        assert z ^ p in W
    assert (z ^ 1) not in W


def test_lifted_balance_by_enumeration(lam22):
    lifted = lambda_lift(lam22, 1)
    ones = sum(lifted(v) for v in lifted.base)
    assert (len(lifted.base) - ones, ones) == lifted.balance() == (4 * 2**7, 12 * 2**7)
