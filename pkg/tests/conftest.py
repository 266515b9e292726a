import pytest
from hypothesis import HealthCheck, settings

from ordsemi import corpus
from ordsemi.transform import build_full_transformation

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def ex26():
    return corpus.load("example26")


@pytest.fixture(scope="session")
def t2():
    return build_full_transformation(2)


@pytest.fixture(scope="session")
def t3():
    return build_full_transformation(3)


@pytest.fixture(scope="session")
def law_corpus():
    return {name: corpus.load(name) for name in corpus.LAW_CORPUS}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
