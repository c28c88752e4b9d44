import random

import pytest

from drgcheck.params import IntersectionArray, basic_feasibility, derive_parameters, passes

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the package")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_ACCEPTANCE, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


def random_arrays(count, seed=0, max_diameter=4, max_k=30):
    """Deterministic arrays that pass every basic feasibility check."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < count:
        D = rng.randint(1, max_diameter)
        k = rng.randint(2, max_k)
        b, c = [k], [1]
        for _ in range(1, D):
            ci = rng.randint(c[-1], k)
            hi = min(b[-1], k - ci)
            if hi < 1:
                break
            b.append(rng.randint(1, hi))
            c.append(ci)
        if len(b) < D:
            continue
        if D > 1:
            c[-1] = rng.randint(c[-2], k)
        elif c[0] != 1:
            continue
        try:
            arr = IntersectionArray(tuple(b), tuple(c))
        except ValueError:
            continue
        if arr in seen or not passes(basic_feasibility(derive_parameters(arr))):
            continue
        seen.add(arr)
        out.append(arr)
    return out


@pytest.fixture(scope="session")
def feasible_looking_arrays():
    return random_arrays(200, seed=20240601)
