"""
Acceptance criteria 1-10 at rank 4, exact, each under its time limit.

One PASS/FAIL line per criterion is printed in the pytest terminal summary
(and on stdout when this file is run directly).
"""

import pytest

from schubkp.perm import Permutation, enumerate_S_infty_n, enumerate_Sn, simple
from schubkp.suite import ModuleLog, SCHUR_PARTITIONS, run_criterion

RANK = 4
# seconds; None where no limit is stated
LIMITS = {1: 60, 2: 30, 3: 30, 4: 300, 5: 300, 6: 300, 7: 300, 8: None, 9: None, 10: None}
# checks each sweep must at least perform at rank 4
MIN_CHECKS = {
    1: 24 + sum(1 for _ in enumerate_S_infty_n(3, 4)),
    2: 24 * 3,
    3: 3 + 6 * 6,
    4: 24 * 3,
    5: 6 + 20,
    6: 24,
    7: 36,
    8: 4 * 5,
    9: 24 * 24,
}

LOG = ModuleLog()
DONE: set[int] = set()
LINES: dict[int, str] = {}


def _run(number):
    result = run_criterion(number, RANK, LOG)
    DONE.add(number)
    limit = LIMITS[number]
    in_time = limit is None or result.seconds < limit
    enough = result.checked >= MIN_CHECKS.get(number, 1)
    ok = result.passed and in_time and enough
    status = "PASS" if ok else "FAIL"
    note = "" if in_time else f" over the {limit}s limit"
    note += "" if enough else f" only {result.checked} checks"
    LINES[number] = (f"[{status}] criterion {number}: {result.name} "
                     f"({result.checked} checks, {result.seconds:.2f}s{', limit ' + str(limit) + 's' if limit else ''}){note}")
    return result, in_time, enough


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    if number == 10:
        for k in range(1, 8):
            if k not in DONE:
                run_criterion(k, RANK, LOG)
                DONE.add(k)
    result, in_time, enough = _run(number)
    assert result.passed, result.failures
    assert in_time, f"took {result.seconds:.1f}s"
    assert enough, f"only {result.checked} checks"


def test_schur_sweep_covers_listed_cases():
    # the sweep runs over every non-identity w in S_3, listed ones included
    listed = {simple(1), simple(2), Permutation([1, 3, 2]), Permutation([2, 3, 1]), Permutation([3, 1, 2])}
    assert listed <= {w for w in enumerate_Sn(3) if w.size}
    assert {(1,), (2,), (1, 1), (2, 1)} <= set(SCHUR_PARTITIONS)


if __name__ == "__main__":
    for k in range(1, 11):
        _run(k)
        print(LINES[k])
