import pytest

# (criterion id, description, passed) rows recorded by the acceptance tests
ACCEPTANCE_ROWS = []


@pytest.fixture
def record_criterion():
    def record(cid, description, passed, detail=""):
        ACCEPTANCE_ROWS.append((cid, description, bool(passed), detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, description, passed, detail in sorted(ACCEPTANCE_ROWS, key=lambda r: r[0]):
        line = f"{'PASS' if passed else 'FAIL'}  criterion {cid}: {description}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
