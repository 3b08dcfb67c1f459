import pytest

from dyckperm import partitions


@pytest.fixture(scope="session")
def classes3():
    return partitions.bruteforce_classes(3)


@pytest.fixture(scope="session")
def classes4():
    return partitions.bruteforce_classes(4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
