import pytest
from hypothesis import given, strategies as st

from perfcodes.formats import (
    FormatError,
    dumps_code,
    dumps_lambda,
    dumps_perm,
    dumps_sts,
    dumps_theta,
    loads_code,
    loads_lambda,
    loads_perm,
    loads_sts,
    loads_theta,
    read_code,
    read_lambda,
    write_code,
    write_lambda,
)
from perfcodes.named import CODE_NAMES, LAMBDA_NAMES, named_code, named_lambda, resolve_code, resolve_lambda
from perfcodes.perm import Permutation
from perfcodes.sts import ThetaFn, fano, neighborhood_sts

ENUMERABLE = [n for n in CODE_NAMES if named_code(n).enumerable]


@pytest.mark.parametrize("name", ENUMERABLE)
def test_code_round_trip(name, tmp_path):
    code = named_code(name)
    path = tmp_path / f"{name}.code"
    write_code(path, code)
    back = read_code(path)
    assert back == code and back.n == code.n


@pytest.mark.parametrize("name", LAMBDA_NAMES)
def test_lambda_round_trip(name, tmp_path):
    lam = named_lambda(name)
    path = tmp_path / "l.lambda"
    write_lambda(path, lam, "hamming7_paper")
    back = read_lambda(path, resolve_code)
    assert all(back(y) == lam(y) for y in lam.base)
    assert resolve_lambda(str(path)).values == back.values


def test_lambda_base_relative_to_file(tmp_path, h7):
    write_code(tmp_path / "h.code", h7)
    write_lambda(tmp_path / "l.lambda", named_lambda("V3_11"), "h.code")
    lam = read_lambda(tmp_path / "l.lambda", resolve_code)
    assert lam.base == h7


@pytest.mark.parametrize("name", ["hamming7_paper", "V22_1", "V3_11_doubled"])
def test_sts_round_trip(name):
    S = neighborhood_sts(named_code(name), 0)
    assert loads_sts(dumps_sts(S)) == S


def test_theta_round_trip():
    F = fano()
    th = ThetaFn.with_zeros(F, [(1, 2, 3), (3, 4, 7)])
    assert loads_theta(dumps_theta(th), F) == th


@given(st.permutations(list(range(1, 12))))
def test_perm_round_trip(img):
    p = Permutation(tuple(img))
    assert loads_perm(dumps_perm(p)) == p


@pytest.mark.parametrize(
    "text, msg",
    [
        ("", "empty"),
        ("m=3\n000\n", "header"),
        ("n=3\n0000\n", "length"),
        ("n=3\n010\n010\n", "duplicate"),
        ("n=3\n0a0\n", "0/1"),
    ],
)
def test_malformed_code(text, msg):
    with pytest.raises(FormatError, match=msg):
        loads_code(text)


def test_comments_and_blank_lines_ignored():
    c = loads_code("# a code\nn=3\n\n000\n111\n")
    assert len(c) == 2


def test_malformed_lambda(h7):
    good = dumps_lambda(named_lambda("V22_1"), "hamming7_paper")
    lines = good.splitlines()
    with pytest.raises(FormatError, match="missing"):
        loads_lambda("\n".join(lines[:-1]), resolve_code)
    with pytest.raises(FormatError, match="expected"):
        loads_lambda("\n".join([*lines[:-1], lines[-1] + " 1"]), resolve_code)
    with pytest.raises(FormatError, match="twice"):
        loads_lambda("\n".join([*lines, lines[-1]]), resolve_code)


def test_malformed_sts():
    with pytest.raises(FormatError, match="not a Steiner"):
        loads_sts("order=7\n1 2 3\n")
    with pytest.raises(FormatError, match="ascending"):
        loads_sts("order=3\n2 1 3\n")
    with pytest.raises(FormatError, match="duplicate"):
        loads_sts("order=3\n1 2 3\n1 2 3\n")


def test_malformed_perm():
    with pytest.raises(FormatError):
        loads_perm("degree=3\n1 2\n")
    with pytest.raises(FormatError):
        loads_perm("degree=3\n1 1 2\n")


def test_unknown_names():
    with pytest.raises(KeyError):
        resolve_code("no_such_code")
    with pytest.raises(KeyError):
        resolve_lambda("no_such_lambda")
