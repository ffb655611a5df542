from hypothesis import given, strategies as st

import pytest

from perfcodes.core import support, word
from perfcodes.perm import Permutation, duplicator, tau, word_mapper


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


@given(perms(9), perms(9), perms(9))
def test_group_laws(p, q, r):
    e = Permutation.identity(9)
    assert (p * q) * r == p * (q * r)
    assert p * e == p == e * p
    assert p * p.inverse() == e


@given(perms(7), perms(7), st.integers(1, 7))
def test_product_is_right_to_left(p, q, i):
    assert (p * q)(i) == p(q(i))


@given(perms(20), st.integers(0, (1 << 20) - 1))
def test_word_action_moves_coordinates(p, w):
    assert support(p.apply_word(w)) == p.apply_set(support(w))
    assert word_mapper(p)(w) == p.apply_word(w)


@given(perms(7), perms(7), st.integers(0, 127))
def test_word_action_is_a_homomorphism(p, q, w):
    assert (p * q).apply_word(w) == p.apply_word(q.apply_word(w))


@given(st.integers(0, 127), st.integers(0, 127))
def test_tau_composition(u, v):
    assert tau(u, 7) * tau(v, 7) == tau(u ^ v, 7)
    assert tau(0, 7).is_identity()


@given(perms(7), perms(7))
def test_duplicator_composition(p, q):
    assert duplicator(p) * duplicator(q) == duplicator(p * q)
    assert duplicator(p).fixes(8)


@given(perms(7), st.integers(0, 127))
def test_duplicator_conjugates_tau(p, u):
    d = duplicator(p)
    assert d * tau(u, 7) * d.inverse() == tau(p.apply_word(u), 7)


def test_tau_swaps_blocks():
    t = tau(word([2, 5]), 7)
    assert t(2) == 10 and t(13) == 5 and t(8) == 8 and t(1) == 1


def test_cycles_and_overlapping_from_cycles():
    p = Permutation.from_cycles(5, [(1, 2), (2, 3)])
    # (1 2)(2 3): 3 -> 2 -> 1
    assert p(3) == 1 and p(1) == 2 and p(2) == 3
    assert p.cycle_type() == (3, 1, 1)
    assert str(Permutation.identity(4)) == "()"
    assert str(Permutation.transposition(4, 1, 3)) == "(1 3)"


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.identity(3) * Permutation.identity(4)
