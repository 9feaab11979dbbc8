import pytest

from pasep2.suites import SUITES, run_suite
from pasep2.worked_examples import run_all


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_default_size(name):
    checks = run_suite(name)
    assert checks
    assert [c.name for c in checks if not c.ok] == []


def test_every_worked_example_matches():
    assert [o.name for o in run_all() if not o.ok] == []
