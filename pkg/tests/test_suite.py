import pytest

from schubkp.errors import ResourceLimitError
from schubkp.suite import CRITERIA, ModuleLog, run_criterion, verify_suite


def test_suite_at_rank_three_passes():
    results = verify_suite(3)
    assert [r.number for r in results] == list(range(1, 11))
    assert all(r.passed for r in results), [r.failures for r in results]
    assert all(r.checked > 0 for r in results)


def test_suite_rank_bounds(monkeypatch):
    with pytest.raises(ValueError):
        verify_suite(1)
    with pytest.raises(ResourceLimitError):
        verify_suite(9)
    monkeypatch.setenv("SCHUBKP_SUITE_MAX_RANK", "2")
    with pytest.raises(ResourceLimitError):
        verify_suite(3)


def test_module_log_feeds_invariant_criterion():
    log = ModuleLog()
    run_criterion(1, 3, log)
    before = len(log.modules)
    assert before > 6
    result = run_criterion(10, 3, log)
    assert result.passed and result.checked >= before


def test_result_line_format():
    r = run_criterion(9, 3)
    assert r.line().startswith("[PASS] criterion 9:")
    assert len(CRITERIA) == 10
