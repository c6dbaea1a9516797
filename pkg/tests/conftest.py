import pytest

from thetabound.partitions import g_table


@pytest.fixture(scope="session")
def g14_table():
    # one exact g_{1,4} table shared by the asymptotic checks
    return g_table(1, 4, 50_000)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
