import numpy as np
import pytest

from xychain.config import ChainSpec
from xychain.sweep import ground_state_g


@pytest.fixture(scope="session")
def g_pure_periodic():
    g, _ = ground_state_g(ChainSpec(101, 1.0, boundary="periodic"))
    return g


def random_correlation_like(n, seed):
    """G of a random open chain, used where only determinant algebra is tested."""
    rng = np.random.default_rng(seed)
    from xychain.config import ProfileParams
    spec = ChainSpec(n, float(rng.uniform(0.1, 2.0)), gamma=float(rng.uniform(0, 1)), boundary="open",
                     alpha=ProfileParams(float(rng.uniform(0, 1)), float(rng.uniform(0, 1)), width=0.2, weight=0.5))
    return ground_state_g(spec)[0]


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        detail = dict(item.user_properties).get("detail", "")
        _criteria.append((marker.args[0], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for cid, passed, detail in sorted(_criteria, key=lambda c: int(c[0][1:])):
        terminalreporter.write_line(f"{cid:<4} {'PASS' if passed else 'FAIL'}  {detail}")
