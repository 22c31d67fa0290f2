"""The eleven acceptance criteria, each at its stated budget.

Every test prints one ``PASS``/``FAIL`` line; run with ``pytest -v -s`` or read
the live output, which bypasses capture.
"""

import time

import pytest

from totalgroup.suite import CLAIMS, SuiteConfig

# wall-clock limits in seconds; None means no stated limit
LIMITS = {"C1": 60, "C2": 600, "C3": 600, "C6": 1200}

CHECKS = {
    "C4": lambda r: r.details["wheels"] == {"W6": 7, "W7": 8, "W8": 9},
    "C6": lambda r: r.details["graphs"] == 31,
    "C7": lambda r: r.details["checks"] == 1000,
    "C9": lambda r: all(c > 0 for c in r.details["coverage"].values()),
    "C10": lambda r: r.details["audited"]["no4"] > 0 and r.details["audited"]["no45"] > 0,
    "C11": lambda r: r.details["runs"] == 2 * 10 * 100,
}


@pytest.fixture(scope="module")
def cfg():
    return SuiteConfig(trials=1000, seed=0)


@pytest.mark.slow
@pytest.mark.parametrize("cid", list(CLAIMS), ids=lambda c: f"criterion_{c[1:]}")
def test_criterion(cid, cfg, capsys):
    t0 = time.perf_counter()
    result = CLAIMS[cid](cfg)
    elapsed = time.perf_counter() - t0
    limit = LIMITS.get(cid)
    in_time = limit is None or elapsed < limit
    extra = CHECKS.get(cid, lambda r: True)(result)
    ok = result.status == "holds" and in_time and extra
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {cid[1:]}: {result.statement} "
              f"[{result.status}, {elapsed:.1f}s{'' if limit is None else f' < {limit}s'}]")
    assert result.status == "holds", result.details
    assert in_time, f"{elapsed:.1f}s exceeds {limit}s"
    assert extra, result.details
