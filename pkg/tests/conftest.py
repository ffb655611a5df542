import pytest

from perfcodes.named import named_code, named_lambda


@pytest.fixture(scope="session")
def h7():
    return named_code("hamming7_paper")


@pytest.fixture(scope="session")
def v22():
    return named_code("V22_1")


@pytest.fixture(scope="session")
def v3():
    return named_code("V3_11")


@pytest.fixture(scope="session")
def lam22():
    return named_lambda("V22_1")


@pytest.fixture(scope="session")
def lam3():
    return named_lambda("V3_11")
