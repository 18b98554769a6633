"""One test per acceptance criterion; each prints a PASS/FAIL line (see with ``-s``)."""

import pytest

from toric_hodge import acceptance

_results = {}


def _result(cid):
    if not _results:
        for r in acceptance.run_all(acceptance.DEFAULT_SEED):
            _results[r.id] = r
    return _results[cid]


@pytest.mark.parametrize("cid", range(1, 10))
def test_criterion(cid):
    r = _result(cid)
    print(r.line())
    assert not r.violations, r.violations
    assert r.passed, r.detail
