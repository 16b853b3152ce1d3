"""
Acceptance battery, one test per criterion. Each prints a single PASS/FAIL line.

Sample sizes and the seed are pinned in AcceptanceConfig; every comparison is
exact (integer invariants, counts, group-element equality), so no numerical
tolerance enters anywhere.

Run directly for the bare report:  python3 tests/test_acceptance.py
"""

import sys

import pytest

from vsgroups.acceptance import CRITERIA, AcceptanceConfig, run_criterion

CONFIG = AcceptanceConfig()


def test_config_is_pinned():
    assert CONFIG == AcceptanceConfig(seed=20240611, decomposition_samples=10_000, invariance_samples=10_000,
                                      center_samples=1_000, max_strands=6, max_word_length=40)


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_criterion(index):
    from conftest import ACCEPTANCE_LINES
    r = run_criterion(index, CONFIG)
    ACCEPTANCE_LINES[index] = r.line()
    print(r.line())
    assert r.passed, r.line()


if __name__ == "__main__":
    failed = 0
    for i in range(1, len(CRITERIA) + 1):
        r = run_criterion(i, CONFIG)
        print(r.line(), flush=True)
        failed += not r.passed
    sys.exit(1 if failed else 0)
