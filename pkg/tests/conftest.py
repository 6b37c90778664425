import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lpmsub.lattice_paths import lpm_bases  # noqa: E402
from lpmsub.matroid import uniform  # noqa: E402


def random_lpm(rng: random.Random, kmax: int = 3, nmax: int = 7):
    n = rng.randint(2, nmax)
    k = rng.randint(1, min(kmax, n - 1))
    P = tuple(sorted(rng.sample(range(1, n + 1), k)))
    Q = tuple(sorted(rng.sample(range(1, n + 1), k)))
    lo = tuple(min(p, q) for p, q in zip(P, Q))
    hi = tuple(max(p, q) for p, q in zip(P, Q))
    return lpm_bases(lo, hi, n)


@pytest.fixture(scope="session")
def u24():
    return uniform(2, 4)


@pytest.fixture(scope="session")
def u36():
    return uniform(3, 6)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, detail = results[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
