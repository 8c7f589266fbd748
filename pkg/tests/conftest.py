import pytest

from cdex.model import Instance, to_json

# Filled by the acceptance suite; echoed in the terminal summary so the
# per-criterion verdicts survive pytest's output capture.
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)

# Worked reference instances used across the suite.
REF1 = Instance(7, ({1, 3, 4, 6, 7}, {1, 2, 3, 5}, {1, 5, 6}, {3, 5, 6}))
REF2 = Instance(8, ({3, 4, 6, 7, 8}, {1, 4, 7, 8}, {3, 4, 5, 6, 7, 8}, {1, 2, 6}))
REF3 = Instance(10, ({5, 7, 10},
                     {1, 2, 5, 6, 7, 8, 9},
                     {1, 3, 5, 6, 7, 8, 9, 10},
                     {1, 3, 4, 5, 6, 7, 8, 9},
                     {3, 6, 8, 9}))


@pytest.fixture
def ref1():
    return REF1


@pytest.fixture
def ref2():
    return REF2


@pytest.fixture
def ref3():
    return REF3


@pytest.fixture
def ref1_file(tmp_path):
    path = tmp_path / "ref1.json"
    path.write_text(to_json(REF1))
    return str(path)


@pytest.fixture
def ref2_file(tmp_path):
    path = tmp_path / "ref2.json"
    path.write_text(to_json(REF2))
    return str(path)
