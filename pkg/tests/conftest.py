import pytest

from hamdec.catalog import load_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def graphs(catalog):
    return {e.name: e.graph for e in catalog}


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion and assert it."""

    def record(number: int, ok: bool, message: str, seconds: float, limit: float):
        timely = seconds <= limit
        status = "PASS" if ok and timely else "FAIL"
        line = f"criterion {number:2d} {status}: {message} [{seconds:.2f}s, limit {limit:g}s]"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, message
        assert timely, f"took {seconds:.1f}s, limit {limit:g}s"

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
