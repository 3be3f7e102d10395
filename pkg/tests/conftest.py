import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def acceptance_log(request):
    """Append ``(criterion, passed, detail)``; printed in the terminal summary."""
    lines = request.config.stash[_LINES]

    def log(criterion: str, passed: bool, detail: str) -> None:
        lines.append(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
