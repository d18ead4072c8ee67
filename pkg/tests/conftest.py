import mpmath
import pytest


@pytest.fixture
def mp50():
    with mpmath.workdps(50):
        yield mpmath.mp


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_criterion():
    """Record a one-line PASS/FAIL verdict; printed again in the terminal summary."""

    def record(number, label, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  criterion {number}: {label}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
