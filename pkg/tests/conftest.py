"""Shared test plumbing: the acceptance scorecard summary."""

SCORECARD: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if SCORECARD:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance scorecard:")
        for line in SCORECARD:
            terminalreporter.write_line(line)
