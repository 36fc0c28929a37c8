from pathlib import Path

import pytest

from zetakirch.graph import complete_graph, parse_graph, path_graph

DATA = Path(__file__).resolve().parent.parent / "data"


def data_path(*parts) -> str:
    return str(DATA.joinpath(*parts))


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def p3():
    return path_graph(3, [2, 3])


@pytest.fixture
def k4w():
    return parse_graph(Path(data_path("graphs", "k4_weighted.wgr")).read_text())


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
