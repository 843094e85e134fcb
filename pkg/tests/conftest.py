import pytest

from helpers import ACCEPTANCE_LINES, GOLDEN_RAW, make_suite
from suffixient.pipeline import suffixient_array
from suffixient.text import load_text


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    # load or compile the numba kernels once, outside any timed section
    suffixient_array(b"warm up the compiled kernels")


@pytest.fixture(scope="session")
def golden():
    return load_text(GOLDEN_RAW)


@pytest.fixture(scope="session")
def suite():
    return make_suite()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
