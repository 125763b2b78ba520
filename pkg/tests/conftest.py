"""Independent oracles shared by the tests.

Nothing here calls into the package: the digamma and log-gamma oracles shift
very far right with the plain recurrence and then use a short asymptotic
series, which is a different algorithm from the package's shifted
Stirling series with a 16-unit threshold.
"""

import cmath
import math

import numpy as np
import pytest

SHIFT = 10_000


def psi_oracle(s: complex, shift: int = SHIFT) -> complex:
    # Psi(s) = Psi(s + N) - sum_{j<N} 1/(s + j)
    j = np.arange(shift)
    corr = np.sum(1.0 / (s + j))
    w = s + shift
    return cmath.log(w) - 1 / (2 * w) - 1 / (12 * w**2) + 1 / (120 * w**4) - corr


def loggamma_oracle(s: complex, shift: int = SHIFT) -> complex:
    """log Gamma via the product recurrence; principal branch is not tracked."""
    j = np.arange(shift)
    corr = np.sum(np.log(s + j))
    w = s + shift
    lg = (w - 0.5) * cmath.log(w) - w + 0.5 * math.log(2 * math.pi) + 1 / (12 * w) - 1 / (360 * w**3)
    return lg - corr


def von_mangoldt_sum(power: float, limit: int) -> float:
    """sum_{n <= limit} Lambda(n) / n^power via a prime sieve."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    total = 0.0
    for p in np.flatnonzero(sieve):
        lp = math.log(p)
        q = int(p)
        while q <= limit:
            total += lp / q**power
            q *= p
    return total


@pytest.fixture(scope="session")
def mp():
    return pytest.importorskip("mpmath")


@pytest.fixture(scope="session")
def zeros_table():
    from zetamono import load_bundled_zeros

    return load_bundled_zeros()


_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = ""
        if rep.failed and call.excinfo is not None:
            detail = str(call.excinfo.value).splitlines()[0][:110]
        _ACCEPTANCE[mark.args[0]] = (mark.args[1], rep.outcome.upper(), rep.duration, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, status, dur, detail = _ACCEPTANCE[n]
        line = f"[{'PASS' if status == 'PASSED' else 'FAIL'}] {n:2d}. {title} ({dur:.2f} s)"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))
