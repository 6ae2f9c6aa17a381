import pytest

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance"):
        failed = report.failed
        if report.when == "call" or failed:
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _acceptance.append((doc, "FAIL" if failed else "PASS"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for doc, status in _acceptance:
        terminalreporter.write_line(f"{status}  {doc}")
