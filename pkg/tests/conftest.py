import pytest

from numindex import l1, linf, octagon

FIVE = {
    "linf2": linf(2),
    "l1_2": l1(2),
    "linf3": linf(3),
    "l1_3": l1(3),
    "octagon": octagon(),
}
SMALL = ["linf2", "l1_2", "octagon"]


@pytest.fixture(params=sorted(FIVE))
def five_space(request):
    return FIVE[request.param]


@pytest.fixture(params=SMALL)
def small_space(request):
    return FIVE[request.param]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
