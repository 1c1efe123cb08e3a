from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from flowmra.fixtures import chain, reference_graph, reference_subgraph
from flowmra.flowgraph import validate_flow_graph
from flowmra.graph_core import LGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def G():
    return reference_graph()


@pytest.fixture
def FG():
    return validate_flow_graph(reference_graph())


@pytest.fixture
def H():
    return reference_subgraph()


@pytest.fixture
def diamond():
    return LGraph.from_pairs(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


@pytest.fixture
def chain3():
    return chain(3)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
