import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


def record(number: int, ok: bool, text: str) -> None:
    ACCEPTANCE_LINES[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {text}"


@pytest.fixture
def criterion():
    """Record the outcome line for an acceptance criterion, then assert it."""

    def check(number: int, ok: bool, text: str) -> None:
        record(number, ok, text)
        print(ACCEPTANCE_LINES[number])
        assert ok, text

    return check


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
