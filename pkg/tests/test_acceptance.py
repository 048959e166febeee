"""One exact check per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from bethe_yangian.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    name, (ok, details) = run_criterion(number, seed=0)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {name}")
    assert ok, details
