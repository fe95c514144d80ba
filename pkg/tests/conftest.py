import pytest

from sigmaset import evaluate_text


def sv(text: str):
    """Evaluate a literal or expression in the surface syntax."""
    return evaluate_text(text)


@pytest.fixture
def s():
    return sv


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
