"""Every reproduction criterion at its stated tolerance, one line each."""

import pytest

from perfcodes.repro import CRITERIA, run_criterion


@pytest.mark.parametrize("crit", CRITERIA, ids=[c.key for c in CRITERIA])
def test_criterion(crit, capsys):
    result = run_criterion(crit)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
