import pytest

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title = mark.args
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict, seconds = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  ({seconds:7.2f} s)  {title}")
