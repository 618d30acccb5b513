from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: list[tuple[str, str, str]] = []


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pascal_row(n: int) -> list[int]:
    """Row n of Pascal's triangle by additions only (test oracle)."""
    r = [1]
    for _ in range(n):
        r = [a + b for a, b in zip([0] + r, r + [0])]
    return r


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    marker = report.keywords.get("criterion")
    if marker is None:
        return
    label = getattr(report, "criterion_label", None) or report.nodeid
    _criteria.append((label, "PASS" if report.passed else "FAIL", f"{report.duration:.2f}s"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion_label = m.args[0]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, duration in _criteria:
        terminalreporter.write_line(f"{status}  {label}  ({duration})")
