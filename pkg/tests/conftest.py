import pytest

from gentlehh.generators import corpus_entry
from gentlehh.quiver import parse_presentation

LOOP = "vertices: 1\narrow a: 1 -> 1\nrelation a a\n"
A2 = "vertices: 1 2\narrow a: 1 -> 2\n"
A3 = "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"
KRONECKER = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n"
Z2 = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a b\nrelation b a\n"

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture
def loop():
    return parse_presentation(LOOP)


@pytest.fixture
def a2():
    return parse_presentation(A2)


@pytest.fixture
def a3():
    return parse_presentation(A3)


@pytest.fixture
def kronecker():
    return parse_presentation(KRONECKER)


@pytest.fixture
def z2():
    return parse_presentation(Z2)


@pytest.fixture
def named():
    return lambda name: corpus_entry(name).presentation


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
