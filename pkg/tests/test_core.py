import random

import pytest
from hypothesis import given, strategies as st

from perfcodes.core import (
    DimensionMismatch,
    EchelonBasis,
    ExplicitCode,
    LinearCode,
    NotASubcode,
    check_perfect,
    code_stats,
    coset_representatives,
    dot,
    enumerate_span,
    gf2_rank,
    hamming,
    hamming7_paper,
    kernel,
    kernel_brute,
    kernel_is_exact,
    min_distance,
    rank,
    rank_by_enumeration,
    span,
    support,
    weight_distribution,
    word,
    word_from_str,
    word_to_str,
)

words15 = st.integers(min_value=0, max_value=(1 << 15) - 1)


@given(words15)
def test_word_string_round_trip(w):
    assert word_from_str(word_to_str(w, 15)) == w
    assert word(support(w)) == w


def test_coordinates_are_one_based():
    assert word([1]) == 1
    assert word_to_str(word([1, 3]), 4) == "1010"
    with pytest.raises(ValueError):
        word([0])
    with pytest.raises(ValueError):
        word_from_str("10x")


@given(st.lists(words15, max_size=12))
def test_echelon_rank_matches_span_size(vs):
    ech = EchelonBasis(vs)
    assert len(set(enumerate_span(ech.basis()))) == 1 << len(ech)
    assert all(v in ech for v in vs)
    assert gf2_rank(vs) == len(ech)


def test_h7_generators_and_weights(h7):
    assert len(h7) == 16
    assert weight_distribution(h7) == {0: 1, 3: 7, 4: 7, 7: 1}
    assert h7 == hamming(7)
    assert min_distance(h7) == 3


@pytest.mark.parametrize("n", [3, 7, 15])
def test_hamming_is_perfect(n):
    H = hamming(n)
    assert check_perfect(H) == (True, "full ball cover")
    assert len(H) == 1 << (n - n.bit_length())


def test_hamming_rejects_bad_length():
    with pytest.raises(ValueError):
        hamming(8)


def test_hamming31_perfect_by_sampling():
    ok, method = check_perfect(hamming(31))
    assert ok and "sphere-packing" in method


def test_non_perfect_detected(h7):
    broken = ExplicitCode(7, [w for w in h7 if w != 0] + [1])
    ok, _ = check_perfect(broken)
    assert not ok
    assert check_perfect(ExplicitCode(8, [0]))[0] is False


def test_kernel_matches_brute_oracle(v22, v3):
    for V in (v22, v3):
        ker = kernel(V)
        assert sorted(ker) == sorted(kernel_brute(V))
        assert len(ker) == 128
        assert kernel_is_exact(V)


def test_kernel_of_linear_code_is_itself(h7):
    assert kernel(h7) is h7


def test_rank_structural_equals_enumerated(v22, v3, h7):
    for C in (v22, v3, h7):
        assert rank(C) == rank_by_enumeration(C)
    assert rank(v22) == 12


def test_rank_of_lazy_length31(h7):
    from perfcodes.named import named_code

    W = named_code("V22_1_doubled")
    assert W.n == 31 and len(W) == 1 << 26
    assert rank(W) == 27
    assert not kernel_is_exact(W)
    assert len(kernel(W)) == 1 << 22


def test_span_and_dimension_mismatch():
    c = span([word([1, 2]), word([2, 3])], 3)
    assert len(c) == 4
    with pytest.raises(DimensionMismatch):
        span([word([5])], 3)
    with pytest.raises(DimensionMismatch):
        LinearCode(3, [word([4])])


def test_coset_representatives(v22):
    ker = kernel(v22)
    sub = LinearCode(15, EchelonBasis(ker).basis())
    reps = coset_representatives(v22, sub)
    assert len(reps) == 16
    with pytest.raises(NotASubcode):
        coset_representatives(v22, LinearCode(15, [word([1])]))


def test_sample_is_in_code(v3):
    rng = random.Random(5)
    assert all(w in v3 for w in v3.sample(300, rng))


def test_code_stats(v3):
    st_ = code_stats(v3).as_dict()
    assert st_["n"] == 15 and st_["size"] == 2048 and st_["rank"] == 12 and st_["kernel"] == 128
    assert st_["weight_distribution"]["3"] == 35


@given(st.integers(0, 127), st.integers(0, 127))
def test_dot_bilinear(u, y):
    z = 0b1010101
    assert dot(u, y ^ z) == dot(u, y) ^ dot(u, z)
