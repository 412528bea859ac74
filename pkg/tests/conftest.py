import sys

import pytest

from cycleindex import _kernels, bipartite
from cycleindex.powersum import PowerSumPoly, parse_poly


def poly(text, degree=None):
    if text == "p[]":
        return PowerSumPoly.one()
    return parse_poly(text, degree)


@pytest.fixture(scope="session")
def pipeline():
    return bipartite.default_pipeline()


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    """Run a test once per kernel backend, restoring the default afterwards."""
    before = _kernels.current_backend()
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(before)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
