import math

import pytest

from absgraph import _kernels
from absgraph.graph import GraphFamily, generate

BACKENDS = sorted(_kernels.BACKENDS)

_acceptance = {}


def fam(kind, *params):
    return generate(GraphFamily(kind, params))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.skipped:
        _acceptance[report.nodeid] = "skipped"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else outcome.upper():<8}{name}")
    terminalreporter.write_line(f"{'N/A':<8}test_criterion_8_out_of_scope "
                                "(benzenoid structures, n = 9 claims)")
