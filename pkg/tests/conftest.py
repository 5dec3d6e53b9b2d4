import pytest

from homex.corpus import full_corpus

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return full_corpus(seed=0)


@pytest.fixture
def record_criterion():
    """Store a one-line verdict for the acceptance summary."""

    def record(label, passed, detail):
        _ACCEPTANCE_LINES.append((str(label), passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    order = lambda item: (not item[0].isdigit(), int(item[0]) if item[0].isdigit() else 0, item[0])
    for label, passed, detail in sorted(_ACCEPTANCE_LINES, key=order):
        name = f"criterion {label:>2}" if label.isdigit() else label
        terminalreporter.write_line(f"{name}: {'PASS' if passed else 'FAIL'}  {detail}")
