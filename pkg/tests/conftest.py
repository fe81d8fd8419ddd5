import os
from pathlib import Path

import pytest
from hypothesis import settings

from snarkforge.generators import named_graph
from snarkforge.graph import read_graph6_file

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
DATA = Path(__file__).resolve().parent / "data"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# the acceptance verdicts, printed at the end of the run
_VERDICTS: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _VERDICTS[label] = (status, text)


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_VERDICTS, key=lambda s: (int("".join(c for c in s if c.isdigit())), s)):
        status, text = _VERDICTS[label]
        terminalreporter.write_line(f"{status}  criterion {label}: {text}")


def corpus_graphs(n):
    path = CORPUS / f"hypo_{n}.g6"
    return read_graph6_file(path) if path.exists() else []


@pytest.fixture(scope="session")
def P():
    return named_graph("P")


@pytest.fixture(scope="session")
def B1():
    return named_graph("B1")


@pytest.fixture(scope="session")
def B2():
    return named_graph("B2")


@pytest.fixture(scope="session")
def L1():
    return named_graph("L1")


@pytest.fixture(scope="session")
def J5():
    return named_graph("J5")
