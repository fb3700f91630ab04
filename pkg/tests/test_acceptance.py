"""Exit criteria, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import pytest

from bridgelab.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [num for num, *_ in CRITERIA], ids=[f"criterion-{num}" for num, *_ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    print(result.line)
    assert result.passed, result.detail
