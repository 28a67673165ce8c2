from __future__ import annotations

import pytest

from orientedchi.graph import build_graph, gen_basic, gen_hypercube

_criteria: dict[int, tuple[str, list[str]]] = {}


def corpus_graphs():
    """Small named graphs used across the suite (each m <= 12)."""
    graphs = {f"P{n}": gen_basic("path", n) for n in range(2, 6)}
    graphs.update({f"C{n}": gen_basic("cycle", n) for n in range(3, 7)})
    graphs["K1,3"] = gen_basic("star", 4)
    graphs["K4"] = gen_basic("complete", 4)
    graphs["Q2"] = gen_hypercube(2)
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


@pytest.fixture
def single_vertex():
    return build_graph(1, [])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    number, title = marker.args
    _, outcomes = _criteria.setdefault(number, (title, []))
    if rep.when == "call" or rep.failed:
        outcomes.append(rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        status = "PASS" if outcomes and all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}")
