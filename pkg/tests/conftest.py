from pathlib import Path

import pytest

from symiso import fileio
from symiso.symcore import Graph, GroupCase, build_symmetric_graph

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def load(name, group=None):
    """(SymmetricGraph, norm) from a bundled instance file."""
    return fileio.parse_instance(fileio.read_json(DATA / f"{name}.json"), group)


def sym(n, edges, case, action):
    case = GroupCase.parse(case) if isinstance(case, str) else case
    return build_symmetric_graph(Graph.from_edges(n, edges), case, dict(enumerate(action)))


@pytest.fixture
def w5():
    return load("w5")[0]


@pytest.fixture(params=["linf", "l1"])
def norm(request):
    return fileio.parse_norm(request.param)


# acceptance lines, printed at the end of the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE, key=lambda s: s.split(" ", 1)[1]):
        terminalreporter.write_line(line)
