import functools

import pytest

from ydlab.cli import catalog_model

ACCEPTANCE = []


@functools.lru_cache(maxsize=None)
def model(name):
    return catalog_model(name)


@pytest.fixture
def get_model():
    return model


def record(number, ok, text):
    ACCEPTANCE.append((number, ok, text))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, text in sorted(ACCEPTANCE):
        terminalreporter.write_line("criterion %2d: %s  %s" % (number, "PASS" if ok else "FAIL", text))
